#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/core/matrix.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geodiscord::reservoir {

enum class Topology { independent, common };
enum class Regime { markovian, non_markovian, boundary };

std::string_view to_string(Topology t);
std::optional<Topology> parse_topology(std::string_view text);

/// Zero-temperature Lorentzian reservoir J(w) = gamma0 lambda^2 / (2 pi ((w - w_c)^2 + lambda^2)),
/// with detuning delta = omega0 - w_c. All rates share one (arbitrary) unit;
/// dynamics is computed in the frame rotating at omega0, so omega0 is
/// carried for reference only.
struct ReservoirParams {
  double gamma0 = 1.0;
  double lambda = 1.0;
  double delta = 0.0;
  Topology topology = Topology::independent;
  double omega0 = 0.0;

  /// Markovian iff lambda > 2 gamma0; equality is reported as the boundary.
  Regime regime() const;
  void validate() const;
};

/// alpha |10> + e^{i phase} sqrt(1 - alpha^2) |01>.
struct InitialPhi {
  double alpha2 = 0.5;
  double phase = 0.0;

  void validate() const;
  /// Amplitudes in the basis |00>, |01>, |10>, |11>.
  std::array<Complex, 4> amplitudes() const;
  DensityMatrix density() const;
};

/// Single-excitation amplitudes: c1 on |10>, c2 on |01>, b on the
/// auxiliary (pseudo)mode.
struct AmplitudeTriple {
  Complex c1 = 0.0;
  Complex c2 = 0.0;
  Complex b = 0.0;

  double norm2() const { return std::norm(c1) + std::norm(c2) + std::norm(b); }
};

/// Values sampled on a strictly increasing scaled-time (gamma0 t) grid.
struct TimeSeries {
  std::vector<double> scaled_times;
  std::vector<double> values;
  std::string label;

  void validate() const;
};

/// Throws std::invalid_argument unless `times` is nonempty, finite,
/// nonnegative and strictly increasing.
void validate_time_grid(std::span<const double> times);

/// n points evenly spaced over [0, t_max].
std::vector<double> uniform_grid(double t_max, std::size_t n);

}  // namespace geodiscord::reservoir
