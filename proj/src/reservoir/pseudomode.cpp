#include "geodiscord/reservoir/pseudomode.hpp"

#include "geodiscord/core/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace geodiscord::reservoir {
namespace {

// Basis: 0 = |00,0>, 1 = |10,0>, 2 = |01,0>, 3 = |00,1> (last slot: pseudomode).
constexpr std::size_t kDim = 4;
using State = std::array<Complex, kDim * kDim>;

struct Generator {
  std::array<Complex, kDim * kDim> h{};
  double loss = 0.0;  // Lindblad rate of the pseudomode jump |0><3|

  State operator()(const State& rho) const {
    State out{};
    const Complex minus_i(0.0, -1.0);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) {
        Complex commutator = 0.0;
        for (std::size_t k = 0; k < kDim; ++k) {
          commutator += h[i * kDim + k] * rho[k * kDim + j] - rho[i * kDim + k] * h[k * kDim + j];
        }
        out[i * kDim + j] = minus_i * commutator;
      }
    // D[L] rho with L = |0><3|: L rho L^dag = rho_33 |0><0|, {L^dag L, rho}/2 damps row and column 3.
    out[0] += loss * rho[3 * kDim + 3];
    for (std::size_t k = 0; k < kDim; ++k) {
      out[3 * kDim + k] -= 0.5 * loss * rho[3 * kDim + k];
      out[k * kDim + 3] -= 0.5 * loss * rho[k * kDim + 3];
    }
    return out;
  }
};

State axpy(const State& x, Complex a, const State& y) {
  State out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + a * y[i];
  return out;
}

void rk4_step(const Generator& f, State& rho, double dt) {
  const State k1 = f(rho);
  const State k2 = f(axpy(rho, 0.5 * dt, k1));
  const State k3 = f(axpy(rho, 0.5 * dt, k2));
  const State k4 = f(axpy(rho, dt, k3));
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

std::vector<State> integrate(const Generator& f, const State& initial, std::span<const double> times,
                             double step) {
  std::vector<State> out;
  out.reserve(times.size());
  State rho = initial;
  double now = 0.0;
  for (double target : times) {
    const double span = target - now;
    if (span > 0.0) {
      const auto n = static_cast<long>(std::ceil(span / step - 1e-9));
      const double dt = span / static_cast<double>(n);
      for (long s = 0; s < n; ++s) rk4_step(f, rho, dt);
      now = target;
    }
    out.push_back(rho);
  }
  return out;
}

double max_difference(const std::vector<State>& a, const std::vector<State>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i < a[k].size(); ++i) worst = std::max(worst, std::abs(a[k][i] - b[k][i]));
  return worst;
}

// Trace out the pseudomode; qubit basis |00>, |01>, |10>, |11>.
DensityMatrix qubit_state(const State& rho) {
  const auto at = [&](std::size_t i, std::size_t j) { return rho[i * kDim + j]; };
  ComplexMatrix q(4, 4);
  q(0, 0) = at(0, 0) + at(3, 3);
  q(2, 2) = at(1, 1);
  q(1, 1) = at(2, 2);
  q(2, 1) = at(1, 2);
  q(1, 2) = at(2, 1);
  q(0, 2) = at(0, 1);
  q(2, 0) = at(1, 0);
  q(0, 1) = at(0, 2);
  q(1, 0) = at(2, 0);
  return DensityMatrix(std::move(q));
}

}  // namespace

std::vector<DensityMatrix> ode_oracle_common(const InitialPhi& init, std::span<const double> scaled_times,
                                             const ReservoirParams& params, const PseudomodeOptions& options) {
  params.validate();
  if (params.topology != Topology::common) throw std::invalid_argument("ode_oracle_common requires a common reservoir");
  for (std::size_t i = 0; i < scaled_times.size(); ++i) {
    if (!(scaled_times[i] >= 0.0) || (i > 0 && scaled_times[i] < scaled_times[i - 1])) {
      throw std::invalid_argument("ode_oracle_common: times must be nonnegative and nondecreasing");
    }
  }

  // Work in units of 1/gamma0 so that the requested scaled times are the integration times.
  const double omega = std::sqrt(params.lambda / params.gamma0 / 2.0);
  Generator f;
  f.h[1 * kDim + 3] = f.h[3 * kDim + 1] = omega;
  f.h[2 * kDim + 3] = f.h[3 * kDim + 2] = omega;
  f.h[3 * kDim + 3] = -params.delta / params.gamma0;
  f.loss = 2.0 * params.lambda / params.gamma0;

  const auto psi = init.amplitudes();
  const std::array<Complex, kDim> sector = {psi[0], psi[2], psi[1], 0.0};
  State initial{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) initial[i * kDim + j] = sector[i] * std::conj(sector[j]);

  double step = options.initial_step;
  std::vector<State> coarse = integrate(f, initial, scaled_times, step);
  for (;;) {
    step *= 0.5;
    if (step < options.min_step) {
      throw NumericalError("ode_oracle_common: step fell below " + std::to_string(options.min_step) +
                           " without reaching agreement " + std::to_string(options.agreement));
    }
    std::vector<State> fine = integrate(f, initial, scaled_times, step);
    const bool converged = max_difference(coarse, fine) < options.agreement;
    coarse = std::move(fine);
    if (converged) break;
  }

  std::vector<DensityMatrix> out;
  out.reserve(coarse.size());
  for (const auto& s : coarse) out.push_back(qubit_state(s));
  return out;
}

}  // namespace geodiscord::reservoir
