#include "geodiscord/discord/trace_distance.hpp"

#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/linalg.hpp"
#include "geodiscord/core/pauli.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace geodiscord::discord {

double dt_xstate(const XStateParams& x) {
  x.validate();
  const double a23 = std::abs(x.rho23);
  const double a14 = std::abs(x.rho14);
  const double g1 = 2.0 * (a23 + a14);
  const double g2 = 2.0 * (a23 - a14);
  const double g3 = 1.0 - 2.0 * (x.p22 + x.p33);
  const double xa3 = 2.0 * (x.p11 + x.p22) - 1.0;

  const double g1s = g1 * g1;
  const double g2s = g2 * g2;
  const double g3s = g3 * g3;
  const double gmax2 = std::max(g3s, g2s + xa3 * xa3);
  const double gmin2 = std::min(g1s, g3s);

  const double den = gmax2 - gmin2 + g1s - g2s;
  // den vanishes only when |g1| = |g2| = |g3| and xa3 = 0; the formula then
  // tends to |g1| along every approach.
  if (std::abs(den) < 1e-15) return std::min(1.0, std::abs(g1));
  const double num = g1s * gmax2 - g2s * gmin2;
  return std::clamp(std::sqrt(std::max(0.0, num / den)), 0.0, 1.0);
}

double dt_bell_diagonal(const BellDiagonalParams& c) {
  c.validate();
  std::array<double, 3> a = {std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)};
  std::sort(a.begin(), a.end());
  return a[1];
}

namespace {

// rho - Pi_u(rho) = (rho - S rho S) / 2 with S = u.sigma (x) I and
// Pi_u(rho) = sum_{+-} (P_+- (x) I) rho (P_+- (x) I). S rho S is quadratic in
// u, so the six symmetric pieces s_i rho s_j + s_j rho s_i are built once.
class DephasingDistance {
 public:
  explicit DephasingDistance(const DensityMatrix& rho) : rho_(rho.matrix()) {
    if (rho.dim() % 2 != 0) throw DimensionError("measurement_distance: dimension must be 2 n_B");
    const ComplexMatrix id = ComplexMatrix::identity(rho.dim() / 2);
    const auto sigmas = pauli::sigmas();
    std::array<ComplexMatrix, 3> s;
    for (std::size_t i = 0; i < 3; ++i) s[i] = kron(sigmas[i], id);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        pieces_[k] = s[i] * rho_ * s[j];
        if (j != i) pieces_[k] += s[j] * rho_ * s[i];
        ++k;
      }
  }

  double operator()(const UnitVector3& u) const {
    const auto c = u.cartesian();
    const std::array<double, 6> w = {c[0] * c[0], c[0] * c[1], c[0] * c[2], c[1] * c[1], c[1] * c[2], c[2] * c[2]};
    ComplexMatrix diff = rho_;
    auto out = diff.data();
    for (std::size_t k = 0; k < 6; ++k) {
      const auto p = pieces_[k].data();
      for (std::size_t e = 0; e < out.size(); ++e) out[e] -= w[k] * p[e];
    }
    diff *= 0.5;
    return trace_norm(diff);
  }

 private:
  ComplexMatrix rho_;
  std::array<ComplexMatrix, 6> pieces_;
};

}  // namespace

double measurement_distance(const DensityMatrix& rho, const UnitVector3& u) {
  if (rho.dim() % 2 != 0) throw DimensionError("measurement_distance: dimension must be 2 n_B");
  const ComplexMatrix s = kron(pauli::along(u.cartesian()), ComplexMatrix::identity(rho.dim() / 2));
  ComplexMatrix diff = rho.matrix() - s * rho.matrix() * s;
  diff *= 0.5;
  return trace_norm(diff);
}

SphereOptimum dt_measurement_search(const DensityMatrix& rho, const MeasurementGrid& grid) {
  const DephasingDistance distance(rho);
  // The trace norm is not smooth where an eigenvalue of rho - Pi_u(rho)
  // crosses zero, and the minimum usually sits in such a kinked valley (a
  // cone for product states). Axis-aligned probes stall there, so finish
  // with a simplex search that can follow the valley. Separate valleys can
  // differ by less than the grid resolves, so several basins are polished.
  return minimize_on_sphere_multistart(distance, grid, 6);
}

double dt_measurement_oracle(const DensityMatrix& rho, const MeasurementGrid& grid) {
  return dt_measurement_search(rho, grid).value;
}

}  // namespace geodiscord::discord
