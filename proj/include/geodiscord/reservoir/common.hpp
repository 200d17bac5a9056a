#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/reservoir/params.hpp"

namespace geodiscord::reservoir {

/// Two qubits in one shared Lorentzian reservoir, single-excitation sector.
/// The antisymmetric combination c- = (c1 - c2)/sqrt2 is dark and keeps its
/// value; the symmetric one couples with strength sqrt2 g and decays like a
/// single qubit with gamma0 replaced by 2 gamma0. b is the amplitude of the
/// Lorentzian pseudomode.
AmplitudeTriple amplitude_common(double scaled_t, const InitialPhi& init, const ReservoirParams& params);

/// Qubit state after tracing out the reservoir.
DensityMatrix evolve_common(const InitialPhi& init, double scaled_t, const ReservoirParams& params);

/// t -> infinity limit (1 - s)|00><00| + s |psi-><psi-| with
/// s = |c-(0)|^2 = (1 - 2 alpha sqrt(1 - alpha^2) cos phase) / 2, for any
/// gamma0 and lambda.
DensityMatrix steady_common(const InitialPhi& init);

/// |c-(0)|^2 for the initial state.
double dark_weight(const InitialPhi& init);

}  // namespace geodiscord::reservoir
