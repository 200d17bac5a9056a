#include "geodiscord/experiments/sweep.hpp"

#include "geodiscord/reservoir/discord_trace.hpp"

#include <fstream>
#include <stdexcept>

namespace geodiscord::experiments {

std::vector<CsvRow> run_sweep(const ExperimentConfig& config) {
  config.validate();
  const auto params = config.reservoir_params();
  const auto times = config.time_grid();
  std::vector<CsvRow> rows;
  rows.reserve(config.alpha2_list.size() * config.measures.size() * times.size());
  for (double alpha2 : config.alpha2_list) {
    for (auto measure : config.measures) {
      const auto series = reservoir::discord_trace({alpha2, 0.0}, params, times, measure);
      for (std::size_t i = 0; i < times.size(); ++i) {
        rows.push_back({series.scaled_times[i], alpha2, std::string(discord::to_string(measure)), series.values[i]});
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::filesystem::path write_sweep(const ExperimentConfig& config) {
  const auto rows = run_sweep(config);
  std::filesystem::create_directories(config.output_dir);
  const auto path = config.output_dir / "sweep.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_csv(rows);
  if (!out) throw std::runtime_error("failed writing " + path.string());
  return path;
}

}  // namespace geodiscord::experiments
