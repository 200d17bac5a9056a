#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/discord/params.hpp"
#include "geodiscord/discord/sphere_search.hpp"

#include <cstdint>
#include <span>

namespace geodiscord::discord {

/// Normalized Bures discord sqrt((2 + sqrt 2)(1 - sqrt Fmax)).
/// Throws InvalidStateError when fmax is outside [0, 1] by more than 1e-9.
double db_from_fmax(double fmax);

/// Maximal fidelity to classical-quantum states for a Bell-diagonal state,
/// maximized over the cyclic permutations of (c1, c2, c3).
double fmax_bell_diagonal(const BellDiagonalParams& c);

struct FmaxResult {
  double fmax = 0.0;
  UnitVector3 argmax_u;
  std::int64_t evaluations = 0;
};

/// Maximal fidelity for a qubit-qudit state (qubit A leading, dimension 2 nB):
/// max over u of (1 - Tr L(u) + 2 sum_{k<=nB} l_k(u)) / 2 where
/// L(u) = sqrt(rho) (u.sigma (x) I) sqrt(rho) and l_k are its eigenvalues in
/// non-increasing order.
FmaxResult fmax_2xn(const DensityMatrix& rho, std::size_t n_b, const MeasurementGrid& grid = {});

/// The objective above at a single direction; exposed for tests.
double fmax_objective(const DensityMatrix& rho, std::size_t n_b, const UnitVector3& u);

/// For a pure state Fmax is the largest eigenvalue of the reduced state of
/// qubit A (the squared largest Schmidt coefficient).
double fmax_pure(std::span<const Complex> amplitudes, std::size_t n_b);
double db_pure(std::span<const Complex> amplitudes, std::size_t n_b);

}  // namespace geodiscord::discord
