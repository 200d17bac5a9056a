#pragma once

#include "geodiscord/experiments/config.hpp"
#include "geodiscord/experiments/csv.hpp"

#include <vector>

namespace geodiscord::experiments {

/// Evaluates every (alpha2, measure, time) combination of the config.
/// Rows come back sorted by (alpha2, measure, time).
std::vector<CsvRow> run_sweep(const ExperimentConfig& config);

/// Runs the sweep and writes `<output_dir>/sweep.csv`; returns that path.
std::filesystem::path write_sweep(const ExperimentConfig& config);

}  // namespace geodiscord::experiments
