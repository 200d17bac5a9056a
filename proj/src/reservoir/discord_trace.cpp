#include "geodiscord/reservoir/discord_trace.hpp"

#include "geodiscord/core/parallel.hpp"
#include "geodiscord/reservoir/common.hpp"
#include "geodiscord/reservoir/independent.hpp"

#include <cstdio>

namespace geodiscord::reservoir {

DensityMatrix evolve(const InitialPhi& init, double scaled_t, const ReservoirParams& params) {
  return params.topology == Topology::independent ? evolve_independent(init, scaled_t, params)
                                                  : evolve_common(init, scaled_t, params);
}

TimeSeries discord_trace(const InitialPhi& init, const ReservoirParams& params, std::span<const double> time_grid,
                         discord::Measure measure, const discord::MeasurementGrid& grid) {
  validate_time_grid(time_grid);
  params.validate();
  init.validate();

  TimeSeries series;
  series.scaled_times.assign(time_grid.begin(), time_grid.end());
  series.values.resize(time_grid.size());
  parallel_for(time_grid.size(), [&](std::size_t i) {
    const DensityMatrix rho = evolve(init, time_grid[i], params);
    series.values[i] = discord::evaluate_measure(rho, measure, discord::Method::automatic, grid).value;
  });

  char label[96];
  std::snprintf(label, sizeof label, "%s alpha2=%g %s", std::string(discord::to_string(measure)).c_str(),
                init.alpha2, std::string(to_string(params.topology)).c_str());
  series.label = label;
  return series;
}

}  // namespace geodiscord::reservoir
