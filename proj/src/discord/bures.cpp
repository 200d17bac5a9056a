#include "geodiscord/discord/bures.hpp"

#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/linalg.hpp"
#include "geodiscord/core/pauli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace geodiscord::discord {
namespace {

double clamped_root(double radicand) {
  if (radicand < -1e-12) {
    throw InvalidStateError("fmax_bell_diagonal: negative radicand " + std::to_string(radicand) +
                            " (unphysical correlations)");
  }
  return std::sqrt(std::max(0.0, radicand));
}

// sqrt(rho) (sigma_i (x) I) sqrt(rho) for i = 1, 2, 3; L(u) is their
// u-weighted sum.
struct LambdaBasis {
  std::array<ComplexMatrix, 3> parts;

  LambdaBasis(const DensityMatrix& rho, std::size_t n_b) {
    const ComplexMatrix root = matrix_sqrt_psd(rho);
    const ComplexMatrix id = ComplexMatrix::identity(n_b);
    const auto sigmas = pauli::sigmas();
    for (std::size_t i = 0; i < 3; ++i) parts[i] = root * kron(sigmas[i], id) * root;
  }

  double objective(const UnitVector3& u, std::size_t n_b) const {
    const auto c = u.cartesian();
    ComplexMatrix lambda = parts[0];
    const auto p1 = parts[1].data();
    const auto p2 = parts[2].data();
    auto out = lambda.data();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c[0] * out[k] + c[1] * p1[k] + c[2] * p2[k];
    const std::vector<double> ev = herm_eigenvalues(lambda);
    double total = 0.0;
    double top = 0.0;
    for (std::size_t k = 0; k < ev.size(); ++k) {
      total += ev[k];
      if (k < n_b) top += ev[k];
    }
    return 0.5 * (1.0 - total + 2.0 * top);
  }
};

void check_dims(const DensityMatrix& rho, std::size_t n_b) {
  if (n_b == 0 || rho.dim() != 2 * n_b) {
    throw DimensionError("fmax_2xn: state dimension " + std::to_string(rho.dim()) + " is not 2 x " +
                         std::to_string(n_b));
  }
}

}  // namespace

double db_from_fmax(double fmax) {
  if (fmax < -1e-9 || fmax > 1.0 + 1e-9) {
    throw InvalidStateError("db_from_fmax: fidelity " + std::to_string(fmax) + " outside [0, 1]");
  }
  const double f = std::clamp(fmax, 0.0, 1.0);
  return std::sqrt((2.0 + std::numbers::sqrt2) * (1.0 - std::sqrt(f)));
}

double fmax_bell_diagonal(const BellDiagonalParams& c) {
  c.validate();
  const std::array<double, 3> v = {c.c1, c.c2, c.c3};
  double best = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double ci = v[i];
    const double cj = v[(i + 1) % 3];
    const double ck = v[(i + 2) % 3];
    const double term = clamped_root((1.0 + ci) * (1.0 + ci) - (cj - ck) * (cj - ck)) +
                        clamped_root((1.0 - ci) * (1.0 - ci) - (cj + ck) * (cj + ck));
    best = std::max(best, term);
  }
  return 0.5 + 0.25 * best;
}

double fmax_objective(const DensityMatrix& rho, std::size_t n_b, const UnitVector3& u) {
  check_dims(rho, n_b);
  return LambdaBasis(rho, n_b).objective(u, n_b);
}

FmaxResult fmax_2xn(const DensityMatrix& rho, std::size_t n_b, const MeasurementGrid& grid) {
  check_dims(rho, n_b);
  const LambdaBasis basis(rho, n_b);
  const SphereOptimum opt =
      maximize_on_sphere([&](const UnitVector3& u) { return basis.objective(u, n_b); }, grid);
  return {std::clamp(opt.value, 0.0, 1.0), opt.argument, opt.evaluations};
}

double fmax_pure(std::span<const Complex> amplitudes, std::size_t n_b) {
  if (n_b == 0 || amplitudes.size() != 2 * n_b) {
    throw DimensionError("fmax_pure: expected " + std::to_string(2 * n_b) + " amplitudes");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw InvalidStateError("fmax_pure: state vector is not normalized (norm " +
                            std::to_string(std::sqrt(norm2)) + ")");
  }
  // Reduced state of A is M M^dagger with M the 2 x nB amplitude block.
  double a00 = 0.0;
  double a11 = 0.0;
  Complex a01 = 0.0;
  for (std::size_t k = 0; k < n_b; ++k) {
    const Complex x = amplitudes[k];
    const Complex y = amplitudes[n_b + k];
    a00 += std::norm(x);
    a11 += std::norm(y);
    a01 += x * std::conj(y);
  }
  const double half_gap = std::hypot(0.5 * (a00 - a11), std::abs(a01));
  return std::clamp(0.5 * (a00 + a11) + half_gap, 0.0, 1.0);
}

double db_pure(std::span<const Complex> amplitudes, std::size_t n_b) {
  return db_from_fmax(fmax_pure(amplitudes, n_b));
}

}  // namespace geodiscord::discord
