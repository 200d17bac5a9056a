#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/discord/dispatch.hpp"
#include "geodiscord/discord/sphere_search.hpp"
#include "geodiscord/reservoir/params.hpp"

#include <span>

namespace geodiscord::reservoir {

/// State at scaled time t under the topology in `params`.
DensityMatrix evolve(const InitialPhi& init, double scaled_t, const ReservoirParams& params);

/// Discord of the evolved state over a time grid. Each point goes through
/// discord::evaluate_measure in automatic mode; points are evaluated in
/// parallel.
TimeSeries discord_trace(const InitialPhi& init, const ReservoirParams& params,
                         std::span<const double> time_grid, discord::Measure measure,
                         const discord::MeasurementGrid& grid = discord::MeasurementGrid::series());

}  // namespace geodiscord::reservoir
