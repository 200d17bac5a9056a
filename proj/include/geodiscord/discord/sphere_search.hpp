#pragma once

#include "geodiscord/core/unit_vector.hpp"

#include <cstdint>
#include <functional>

namespace geodiscord::discord {

/// Uniform (theta, phi) grid over the Bloch sphere followed by a
/// coordinate-descent polish. theta nodes include both poles; phi nodes
/// cover [0, 2 pi) without the endpoint. `refinement` caps the number of
/// polish rounds; the polish step starts at the theta spacing and halves
/// until it drops below `min_step`.
struct MeasurementGrid {
  int n_theta = 181;
  int n_phi = 361;
  int refinement = 200;
  double min_step = 1e-6;

  /// 6-degree grid used when a measure is evaluated along a time series.
  static MeasurementGrid series() { return {31, 61, 200, 1e-6}; }

  void validate() const;
};

struct SphereOptimum {
  double value = 0.0;
  UnitVector3 argument;
  std::int64_t evaluations = 0;
};

/// Maximizes `objective` over unit vectors. Grid ties keep the first node in
/// (theta, phi) row-major order; the polish then halves its step from the
/// grid spacing until it drops below 1e-6 or the round budget runs out.
SphereOptimum maximize_on_sphere(const std::function<double(const UnitVector3&)>& objective,
                                 const MeasurementGrid& grid);

/// Same, for minimization.
SphereOptimum minimize_on_sphere(const std::function<double(const UnitVector3&)>& objective,
                                 const MeasurementGrid& grid);

/// Nelder-Mead in the tangent plane at `start.argument`, restarted while it
/// improves. For non-smooth objectives whose minimum sits in a kinked valley,
/// where axis-aligned probes stall. Never returns a worse point than `start`.
SphereOptimum nelder_mead_polish(const std::function<double(const UnitVector3&)>& objective,
                                 const SphereOptimum& start, double initial_size);

/// Grid scan, coordinate descent and simplex polish from the best node, plus
/// simplex polishes from the next `basins - 1` lowest grid-local minima.
/// For objectives with several shallow basins where the best grid node can
/// sit in the wrong one.
SphereOptimum minimize_on_sphere_multistart(const std::function<double(const UnitVector3&)>& objective,
                                           const MeasurementGrid& grid, int basins);

}  // namespace geodiscord::discord
