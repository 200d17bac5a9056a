#include "geodiscord/experiments/threshold.hpp"

#include "geodiscord/discord/params.hpp"
#include "geodiscord/discord/trace_distance.hpp"
#include "geodiscord/reservoir/common.hpp"

namespace geodiscord::experiments {

double steady_gain(double alpha2) {
  const reservoir::InitialPhi init{alpha2, 0.0};
  const double steady = discord::dt_xstate(discord::XStateParams::from_matrix(reservoir::steady_common(init)));
  const double initial = discord::dt_xstate(discord::XStateParams::from_matrix(init.density()));
  return steady - initial;
}

double generation_threshold(double width) {
  // Gain is positive at alpha2 = 0 (a classical state acquires discord) and
  // negative at 1/2 (the dark weight vanishes).
  double lo = 0.0;
  double hi = 0.5;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    (steady_gain(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace geodiscord::experiments
