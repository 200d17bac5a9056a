#pragma once

#include "geodiscord/core/matrix.hpp"

namespace geodiscord::reservoir::detail {

/// Survival amplitude of one emitter coupled to a Lorentzian reservoir with
/// decay rate `gamma`, width `lambda` and detuning `delta` (physical time t).
/// Solves c'' + (lambda - i delta) c' + (gamma lambda / 2) c = 0, c(0) = 1, c'(0) = 0.
struct LorentzianAmplitude {
  Complex value;
  Complex derivative;
};

LorentzianAmplitude lorentzian_amplitude(double t, double gamma, double lambda, double delta);

}  // namespace geodiscord::reservoir::detail
