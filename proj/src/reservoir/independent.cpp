#include "geodiscord/reservoir/independent.hpp"

#include "geodiscord/core/errors.hpp"
#include "geodiscord/reservoir/lorentzian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geodiscord::reservoir {
namespace {

void require_independent(const ReservoirParams& params) {
  params.validate();
  if (params.topology != Topology::independent) {
    throw std::invalid_argument("operation requires independent reservoirs");
  }
}

void require_time(double scaled_t) {
  if (!(scaled_t >= 0.0) || !std::isfinite(scaled_t)) throw std::invalid_argument("scaled time must be >= 0");
}

}  // namespace

Complex amplitude_independent(double scaled_t, const ReservoirParams& params) {
  require_independent(params);
  require_time(scaled_t);
  return detail::lorentzian_amplitude(scaled_t / params.gamma0, params.gamma0, params.lambda, params.delta).value;
}

std::array<ComplexMatrix, 2> damping_kraus(Complex q) {
  const double leak = std::sqrt(std::max(0.0, 1.0 - std::norm(q)));
  return {ComplexMatrix(2, 2, {1.0, 0.0, 0.0, q}), ComplexMatrix(2, 2, {0.0, leak, 0.0, 0.0})};
}

DensityMatrix evolve_independent(const DensityMatrix& rho, double scaled_t, const ReservoirParams& params) {
  if (rho.dim() != 4) throw DimensionError("evolve_independent needs a two-qubit state");
  const Complex q = amplitude_independent(scaled_t, params);
  const auto k = damping_kraus(q);
  ComplexMatrix out(4, 4);
  for (const auto& ka : k)
    for (const auto& kb : k) {
      const ComplexMatrix op = kron(ka, kb);
      out += op * rho.matrix() * op.adjoint();
    }
  return DensityMatrix(std::move(out), rho.tolerance());
}

DensityMatrix evolve_independent(const InitialPhi& init, double scaled_t, const ReservoirParams& params) {
  return evolve_independent(init.density(), scaled_t, params);
}

std::vector<double> critical_times(int n_max, const ReservoirParams& params) {
  require_independent(params);
  if (n_max < 1) throw std::invalid_argument("critical_times: n_max must be positive");
  if (params.delta != 0.0) throw std::invalid_argument("critical_times: defined for zero detuning only");
  if (params.regime() != Regime::non_markovian) {
    throw std::invalid_argument("critical_times: q(t) has no zeros unless lambda < 2 gamma0");
  }
  const double d = std::sqrt(2.0 * params.gamma0 * params.lambda - params.lambda * params.lambda);
  const double offset = std::atan(d / params.lambda);
  std::vector<double> times(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    times[static_cast<std::size_t>(n - 1)] = params.gamma0 * 2.0 * (n * std::numbers::pi - offset) / d;
  }
  return times;
}

}  // namespace geodiscord::reservoir
