#include "geodiscord/experiments/sampling.hpp"

#include "geodiscord/core/linalg.hpp"

#include <cmath>
#include <numbers>

namespace geodiscord::experiments {
namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

discord::BellDiagonalParams random_bell_diagonal(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    discord::BellDiagonalParams c;
    c.c1 = u(rng);
    c.c2 = u(rng);
    c.c3 = u(rng);
    if (1.0 - c.c1 - c.c2 - c.c3 >= 0.0 && 1.0 - c.c1 + c.c2 + c.c3 >= 0.0 &&
        1.0 + c.c1 - c.c2 + c.c3 >= 0.0 && 1.0 + c.c1 + c.c2 - c.c3 >= 0.0) {
      return c;
    }
  }
}

std::vector<Complex> random_pure_state(Rng& rng, std::size_t dim) {
  std::vector<Complex> psi(dim);
  double norm2 = 0.0;
  for (auto& a : psi) {
    a = gaussian(rng);
    norm2 += std::norm(a);
  }
  for (auto& a : psi) a /= std::sqrt(norm2);
  return psi;
}

DensityMatrix random_density_matrix(Rng& rng, std::size_t dim, std::size_t env_dim) {
  const auto psi = random_pure_state(rng, dim * env_dim);
  return DensityMatrix(partial_trace(ComplexMatrix::projector(psi), dim, env_dim, Subsystem::A));
}

discord::XStateParams random_x_state(Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double w[4];
  double total = 0.0;
  for (double& x : w) total += (x = e(rng));
  discord::XStateParams x;
  x.p11 = w[0] / total;
  x.p22 = w[1] / total;
  x.p33 = w[2] / total;
  x.p44 = w[3] / total;
  x.rho14 = std::polar(u(rng) * std::sqrt(x.p11 * x.p44), 2.0 * std::numbers::pi * u(rng));
  x.rho23 = std::polar(u(rng) * std::sqrt(x.p22 * x.p33), 2.0 * std::numbers::pi * u(rng));
  return x;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix q(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) q(r, c) = gaussian(rng);
  // Modified Gram-Schmidt; the implied R has a positive diagonal, which is
  // the phase convention that makes Q Haar distributed.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex overlap = 0.0;
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(q(r, p)) * q(r, c);
      for (std::size_t r = 0; r < n; ++r) q(r, c) -= overlap * q(r, p);
    }
    double norm2 = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm2 += std::norm(q(r, c));
    const double norm = std::sqrt(norm2);
    for (std::size_t r = 0; r < n; ++r) q(r, c) /= norm;
  }
  return q;
}

}  // namespace geodiscord::experiments
