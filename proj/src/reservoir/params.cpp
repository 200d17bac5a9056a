#include "geodiscord/reservoir/params.hpp"

#include "geodiscord/core/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace geodiscord::reservoir {

std::string_view to_string(Topology t) { return t == Topology::independent ? "independent" : "common"; }

std::optional<Topology> parse_topology(std::string_view text) {
  if (text == "independent") return Topology::independent;
  if (text == "common") return Topology::common;
  return std::nullopt;
}

Regime ReservoirParams::regime() const {
  if (lambda > 2.0 * gamma0) return Regime::markovian;
  if (lambda < 2.0 * gamma0) return Regime::non_markovian;
  return Regime::boundary;
}

void ReservoirParams::validate() const {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw std::invalid_argument("gamma0 must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be nonnegative");
  if (!(omega0 >= 0.0)) throw std::invalid_argument("omega0 must be nonnegative");
}

void InitialPhi::validate() const {
  if (!(alpha2 >= 0.0 && alpha2 <= 1.0)) {
    throw InvalidStateError("alpha^2 = " + std::to_string(alpha2) + " is outside [0, 1]");
  }
}

std::array<Complex, 4> InitialPhi::amplitudes() const {
  validate();
  std::array<Complex, 4> psi{};
  psi[2] = std::sqrt(alpha2);
  psi[1] = std::polar(std::sqrt(1.0 - alpha2), phase);
  return psi;
}

DensityMatrix InitialPhi::density() const {
  const auto psi = amplitudes();
  return DensityMatrix::from_pure(psi);
}

void validate_time_grid(std::span<const double> times) {
  if (times.empty()) throw std::invalid_argument("time grid is empty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0) {
      throw std::invalid_argument("time grid entries must be finite and nonnegative");
    }
    if (i > 0 && !(times[i] > times[i - 1])) throw std::invalid_argument("time grid must be strictly increasing");
  }
}

void TimeSeries::validate() const {
  if (scaled_times.size() != values.size()) throw std::invalid_argument("TimeSeries: length mismatch");
  validate_time_grid(scaled_times);
}

std::vector<double> uniform_grid(double t_max, std::size_t n) {
  if (n < 2 || !(t_max > 0.0)) throw std::invalid_argument("uniform_grid needs n >= 2 and t_max > 0");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
  return grid;
}

}  // namespace geodiscord::reservoir
