#include "geodiscord/discord/sphere_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace geodiscord::discord {

void MeasurementGrid::validate() const {
  if (n_theta < 2 || n_phi < 1 || refinement < 0 || !(min_step > 0.0)) {
    throw std::invalid_argument("MeasurementGrid needs n_theta >= 2, n_phi >= 1, refinement >= 0, min_step > 0");
  }
}

namespace {

// Objective values on the (theta, phi) grid, row-major. Pole rows hold one
// value repeated across phi, evaluated once.
struct GridScan {
  std::vector<double> values;
  std::int64_t evaluations = 0;
  double d_theta = 0.0;
  double d_phi = 0.0;
};

GridScan scan(const std::function<double(const UnitVector3&)>& objective, const MeasurementGrid& grid) {
  grid.validate();
  GridScan g;
  g.d_theta = std::numbers::pi / (grid.n_theta - 1);
  g.d_phi = 2.0 * std::numbers::pi / grid.n_phi;
  g.values.resize(static_cast<std::size_t>(grid.n_theta) * grid.n_phi);
  for (int i = 0; i < grid.n_theta; ++i) {
    const auto row = g.values.begin() + static_cast<std::ptrdiff_t>(i) * grid.n_phi;
    // Every phi names the same point at a pole.
    if (i == 0 || i == grid.n_theta - 1) {
      std::fill(row, row + grid.n_phi, objective(UnitVector3(i * g.d_theta, 0.0)));
      ++g.evaluations;
      continue;
    }
    for (int j = 0; j < grid.n_phi; ++j) row[j] = objective(UnitVector3(i * g.d_theta, j * g.d_phi));
    g.evaluations += grid.n_phi;
  }
  return g;
}

// Probes theta +- h, then phi +- h, takes the first strict improvement and
// halves h otherwise.
void coordinate_ascent(const std::function<double(const UnitVector3&)>& objective, const MeasurementGrid& grid,
                       double step, double& theta, double& phi, SphereOptimum& best) {
  for (int round = 0; round < grid.refinement && step >= grid.min_step; ++round) {
    bool moved = false;
    const double probes[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const auto& p : probes) {
      const double v = objective(UnitVector3(theta + p[0], phi + p[1]));
      ++best.evaluations;
      if (v > best.value) {
        best.value = v;
        theta += p[0];
        phi += p[1];
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  best.argument = UnitVector3(theta, phi);
}

SphereOptimum ascend_from_best_node(const std::function<double(const UnitVector3&)>& objective,
                                    const MeasurementGrid& grid, const GridScan& g) {
  // Ties keep the first node.
  const auto it = std::max_element(g.values.begin(), g.values.end());
  const auto k = static_cast<int>(it - g.values.begin());
  double theta = (k / grid.n_phi) * g.d_theta;
  double phi = (k % grid.n_phi) * g.d_phi;
  if (k / grid.n_phi == 0 || k / grid.n_phi == grid.n_theta - 1) phi = 0.0;
  SphereOptimum best;
  best.value = *it;
  best.evaluations = g.evaluations;
  coordinate_ascent(objective, grid, g.d_theta, theta, phi, best);
  return best;
}

}  // namespace

SphereOptimum maximize_on_sphere(const std::function<double(const UnitVector3&)>& objective,
                                 const MeasurementGrid& grid) {
  return ascend_from_best_node(objective, grid, scan(objective, grid));
}

SphereOptimum minimize_on_sphere(const std::function<double(const UnitVector3&)>& objective,
                                 const MeasurementGrid& grid) {
  SphereOptimum r = maximize_on_sphere([&](const UnitVector3& u) { return -objective(u); }, grid);
  r.value = -r.value;
  return r;
}

namespace {

using Vec3 = std::array<double, 3>;
using Point = std::array<double, 2>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

UnitVector3 from_cartesian(const Vec3& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return UnitVector3(std::acos(std::clamp(v[2] / n, -1.0, 1.0)), std::atan2(v[1], v[0]));
}

// One Nelder-Mead run on u(x, y) = normalize(u0 + x e1 + y e2).
SphereOptimum nelder_mead_once(const std::function<double(const UnitVector3&)>& objective, const UnitVector3& origin,
                               double size, std::int64_t& evaluations) {
  const Vec3 u0 = origin.cartesian();
  const Vec3 seed = std::abs(u0[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const Vec3 e2 = [&] {
    Vec3 c = cross(u0, seed);
    const double n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    for (double& x : c) x /= n;
    return c;
  }();
  const Vec3 e1 = cross(e2, u0);
  const auto at = [&](const Point& p) {
    return from_cartesian({u0[0] + p[0] * e1[0] + p[1] * e2[0], u0[1] + p[0] * e1[1] + p[1] * e2[1],
                           u0[2] + p[0] * e1[2] + p[1] * e2[2]});
  };
  const auto f = [&](const Point& p) {
    ++evaluations;
    return objective(at(p));
  };

  std::array<Point, 3> x = {Point{0.0, 0.0}, Point{size, 0.0}, Point{0.0, size}};
  std::array<double, 3> fx = {f(x[0]), f(x[1]), f(x[2])};
  for (int iter = 0; iter < 2000; ++iter) {
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const auto xs = x;
    const auto fs = fx;
    for (int i = 0; i < 3; ++i) {
      x[i] = xs[order[i]];
      fx[i] = fs[order[i]];
    }
    const double diameter = std::max(std::hypot(x[1][0] - x[0][0], x[1][1] - x[0][1]),
                                     std::hypot(x[2][0] - x[0][0], x[2][1] - x[0][1]));
    if (diameter < 1e-11) break;

    const Point centre = {0.5 * (x[0][0] + x[1][0]), 0.5 * (x[0][1] + x[1][1])};
    const auto along = [&](double t) {
      return Point{centre[0] + t * (x[2][0] - centre[0]), centre[1] + t * (x[2][1] - centre[1])};
    };
    const Point xr = along(-1.0);
    const double fr = f(xr);
    if (fr < fx[0]) {
      const Point xe = along(-2.0);
      const double fe = f(xe);
      x[2] = fe < fr ? xe : xr;
      fx[2] = std::min(fe, fr);
      continue;
    }
    if (fr < fx[1]) {
      x[2] = xr;
      fx[2] = fr;
      continue;
    }
    const Point xc = along(fr < fx[2] ? -0.5 : 0.5);
    const double fc = f(xc);
    if (fc < std::min(fr, fx[2])) {
      x[2] = xc;
      fx[2] = fc;
      continue;
    }
    for (int i = 1; i < 3; ++i) {
      x[i] = {0.5 * (x[0][0] + x[i][0]), 0.5 * (x[0][1] + x[i][1])};
      fx[i] = f(x[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  SphereOptimum r;
  r.value = fx[best];
  r.argument = at(x[best]);
  return r;
}

}  // namespace

SphereOptimum nelder_mead_polish(const std::function<double(const UnitVector3&)>& objective,
                                 const SphereOptimum& start, double initial_size) {
  SphereOptimum best = start;
  for (int restart = 0; restart < 8; ++restart) {
    const SphereOptimum trial = nelder_mead_once(objective, best.argument, initial_size, best.evaluations);
    if (!(trial.value < best.value)) break;
    best.value = trial.value;
    best.argument = trial.argument;
  }
  return best;
}

SphereOptimum minimize_on_sphere_multistart(const std::function<double(const UnitVector3&)>& objective,
                                           const MeasurementGrid& grid, int basins) {
  const auto negated = [&](const UnitVector3& u) { return -objective(u); };
  const GridScan g = scan(negated, grid);
  SphereOptimum best = ascend_from_best_node(negated, grid, g);
  best.value = -best.value;
  best = nelder_mead_polish(objective, best, g.d_theta);

  // Other grid-local minima away from the poles, lowest first.
  const auto at = [&](int i, int j) { return g.values[static_cast<std::size_t>(i) * grid.n_phi + ((j + grid.n_phi) % grid.n_phi)]; };
  std::vector<std::pair<double, int>> minima;
  for (int i = 1; i + 1 < grid.n_theta; ++i) {
    for (int j = 0; j < grid.n_phi; ++j) {
      const double v = at(i, j);
      bool local = true;
      for (int di = -1; di <= 1 && local; ++di)
        for (int dj = -1; dj <= 1 && local; ++dj)
          if ((di != 0 || dj != 0) && at(i + di, j + dj) > v) local = false;
      if (local) minima.emplace_back(-v, i * grid.n_phi + j);
    }
  }
  std::sort(minima.begin(), minima.end());
  const auto extra = std::min<std::size_t>(minima.size(), static_cast<std::size_t>(std::max(basins - 1, 0)));
  for (std::size_t m = 0; m < extra; ++m) {
    SphereOptimum start;
    start.value = minima[m].first;
    start.argument = UnitVector3((minima[m].second / grid.n_phi) * g.d_theta, (minima[m].second % grid.n_phi) * g.d_phi);
    const SphereOptimum trial = nelder_mead_polish(objective, start, g.d_theta);
    best.evaluations += trial.evaluations;
    if (trial.value < best.value) {
      best.value = trial.value;
      best.argument = trial.argument;
    }
  }
  return best;
}

}  // namespace geodiscord::discord
