#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/core/matrix.hpp"
#include "geodiscord/discord/params.hpp"

#include <random>
#include <vector>

namespace geodiscord::experiments {

using Rng = std::mt19937_64;

/// Uniform over the physical tetrahedron (rejection from the cube).
discord::BellDiagonalParams random_bell_diagonal(Rng& rng);

/// Haar-random pure state of dimension `dim`.
std::vector<Complex> random_pure_state(Rng& rng, std::size_t dim);

/// Normalized complex-Gaussian purification on dim x env_dim, traced over
/// the environment. env_dim = dim gives the Hilbert-Schmidt ensemble.
DensityMatrix random_density_matrix(Rng& rng, std::size_t dim, std::size_t env_dim);

/// Random two-qubit X state: Dirichlet populations, coherences of uniform
/// relative size inside the positivity bound and uniform phase.
discord::XStateParams random_x_state(Rng& rng);

/// Haar-random unitary (QR of a complex Gaussian matrix with phase fix).
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

}  // namespace geodiscord::experiments
