#pragma once

#include "geodiscord/experiments/csv.hpp"

#include <string>
#include <vector>

namespace geodiscord::experiments {

struct ChartLabels {
  std::string title;
  std::string parameter_name = "alpha2";  ///< legend prefix for the parameter column
};

/// Line chart with one polyline per (measure, parameter) group, in the
/// order the groups first appear in `rows`. x axis is gamma0 t.
std::string render_svg(const std::vector<CsvRow>& rows, const ChartLabels& labels);

}  // namespace geodiscord::experiments
