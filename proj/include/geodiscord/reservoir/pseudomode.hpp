#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/reservoir/params.hpp"

#include <span>
#include <vector>

namespace geodiscord::reservoir {

struct PseudomodeOptions {
  double initial_step = 1e-3;    ///< scaled units (gamma0 dt)
  double agreement = 1e-8;       ///< max elementwise change between successive halvings
  double min_step = 1e-6;        ///< halving below this throws NumericalError
};

/// Common-reservoir dynamics integrated independently of the closed form:
/// a Lindblad equation for the qubits plus one damped pseudomode, restricted
/// to {|00,0>, |10,0>, |01,0>, |00,1>}. Each qubit couples to the mode with
/// Omega = sqrt(gamma0 lambda / 2), the mode amplitude decays at lambda and
/// sits at -delta in the rotating frame. Classical RK4; the step is halved
/// until two successive runs agree. Returns the qubit states at each
/// requested time (nondecreasing, >= 0).
std::vector<DensityMatrix> ode_oracle_common(const InitialPhi& init, std::span<const double> scaled_times,
                                             const ReservoirParams& params,
                                             const PseudomodeOptions& options = {});

}  // namespace geodiscord::reservoir
