#pragma once

#include "geodiscord/discord/dispatch.hpp"
#include "geodiscord/reservoir/params.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geodiscord::experiments {

/// Bad configuration. line() is the 1-based offending line, or 0 when the
/// problem is with the configuration as a whole.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ExperimentConfig {
  reservoir::Topology topology = reservoir::Topology::independent;
  double lambda_over_gamma0 = 0.1;
  double delta_over_gamma0 = 0.0;
  std::vector<double> alpha2_list;
  double t_max = 10.0;
  std::size_t n_points = 1000;
  std::vector<discord::Measure> measures = {discord::Measure::trace};
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = ".";
  /// Explicit scaled times; when nonempty they replace the uniform
  /// [0, t_max] grid of n_points.
  std::vector<double> times;

  void validate() const;
  std::vector<double> time_grid() const;
  reservoir::ReservoirParams reservoir_params() const;
};

// Flat `key = value` lines; `#` starts a comment; lists are comma separated.
//
//   topology = common
//   lambda_over_gamma0 = 0.1
//   alpha2_list = 0, 0.02, 0.1
//   t_max = 100
//   n_points = 500
//   measures = trace, bures
//
// Other keys: delta_over_gamma0, seed, output_dir, times.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig read_config_file(const std::filesystem::path& path);

}  // namespace geodiscord::experiments
