#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/reservoir/params.hpp"

#include <vector>

namespace geodiscord::reservoir {

/// Excited-state amplitude of one qubit in its own Lorentzian reservoir,
/// q(t) = e^{-(lambda - i delta) t/2} [cosh(Dt/2) + (lambda - i delta)/D sinh(Dt/2)],
/// D = sqrt((lambda - i delta)^2 - 2 gamma0 lambda). q(0) = 1 and |q| <= 1.
Complex amplitude_independent(double scaled_t, const ReservoirParams& params);

/// Kraus pair of the amplitude-damping channel with survival amplitude q:
/// K0 = |0><0| + q |1><1|, K1 = sqrt(1 - |q|^2) |0><1|.
std::array<ComplexMatrix, 2> damping_kraus(Complex q);

/// Both qubits damped by their own reservoir (four Kraus products).
DensityMatrix evolve_independent(const DensityMatrix& rho, double scaled_t, const ReservoirParams& params);
DensityMatrix evolve_independent(const InitialPhi& init, double scaled_t, const ReservoirParams& params);

/// Zeros of q for delta = 0 in the non-Markovian regime:
/// gamma0 t_n = gamma0 * 2 [n pi - arctan(d / lambda)] / d with
/// d = sqrt(2 gamma0 lambda - lambda^2), n = 1 .. n_max.
std::vector<double> critical_times(int n_max, const ReservoirParams& params);

}  // namespace geodiscord::reservoir
