#include "geodiscord/experiments/figures.hpp"

#include "geodiscord/experiments/svg.hpp"
#include "geodiscord/reservoir/discord_trace.hpp"
#include "geodiscord/reservoir/independent.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace geodiscord::experiments {
namespace {

using discord::Measure;
using reservoir::Topology;

const std::vector<double> kAlpha2Presets = {0.1, 0.3, 0.5, 0.7, 0.9};

ExperimentConfig preset(Topology topology, double lambda, std::vector<double> alpha2, double t_max,
                        std::size_t n_points, std::vector<Measure> measures) {
  ExperimentConfig c;
  c.topology = topology;
  c.lambda_over_gamma0 = lambda;
  c.delta_over_gamma0 = 0.0;
  c.alpha2_list = std::move(alpha2);
  c.t_max = t_max;
  c.n_points = n_points;
  c.measures = std::move(measures);
  return c;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1a: return "fig1a";
    case FigureId::fig1b: return "fig1b";
    case FigureId::fig2a: return "fig2a";
    case FigureId::fig2b: return "fig2b";
    case FigureId::fig3a: return "fig3a";
    case FigureId::fig3b: return "fig3b";
    case FigureId::fig4: return "fig4";
    case FigureId::fig5: return "fig5";
  }
  return "fig1a";
}

std::optional<FigureId> parse_figure_id(std::string_view text) {
  for (auto id : kAllFigures)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

FigureSpec figure_spec(FigureId id) {
  FigureSpec s{id, {}, {}, {}, TimeGridKind::uniform, false};
  switch (id) {
    case FigureId::fig1a:
      s.title = "Trace discord, independent reservoirs, lambda = 10 gamma0";
      s.config = preset(Topology::independent, 10.0, kAlpha2Presets, 10.0, 1000, {Measure::trace});
      break;
    case FigureId::fig1b:
      s.title = "Trace discord, independent reservoirs, lambda = 0.1 gamma0";
      s.config = preset(Topology::independent, 0.1, kAlpha2Presets, 50.0, 1000, {Measure::trace});
      s.include_critical_times = true;
      break;
    case FigureId::fig2a:
      s.title = "Trace discord, common reservoir, lambda = 10 gamma0";
      s.config = preset(Topology::common, 10.0, kAlpha2Presets, 10.0, 1000, {Measure::trace});
      break;
    case FigureId::fig2b:
      s.title = "Trace discord, common reservoir, lambda = 0.1 gamma0";
      s.config = preset(Topology::common, 0.1, kAlpha2Presets, 100.0, 1000, {Measure::trace});
      break;
    case FigureId::fig3a:
      s.title = "Bures discord, independent reservoirs, lambda = 0.1 gamma0";
      s.config = preset(Topology::independent, 0.1, kAlpha2Presets, 50.0, 1000, {Measure::bures});
      s.include_critical_times = true;
      break;
    case FigureId::fig3b:
      s.title = "Bures discord, common reservoir, lambda = 0.1 gamma0";
      s.config = preset(Topology::common, 0.1, kAlpha2Presets, 100.0, 1000, {Measure::bures});
      break;
    case FigureId::fig4:
      s.title = "Trace and Bures discord, common reservoir, small alpha2, lambda = 0.1 gamma0";
      s.config = preset(Topology::common, 0.1, {0.0, 0.01, 0.02, 0.03, 0.05}, 1000.0, 5000,
                        {Measure::trace, Measure::bures});
      s.grid = TimeGridKind::log_tail;
      break;
    case FigureId::fig5:
      s.title = "Detuned independent reservoirs, alpha2 = 0.5, lambda = 0.1 gamma0";
      s.config = preset(Topology::independent, 0.1, {0.5}, 30.0, 1000, {Measure::trace, Measure::bures});
      s.delta_list = {0.0, 0.5, 1.0, 2.0, 4.0};
      break;
  }
  return s;
}

std::vector<double> figure_time_grid(const FigureSpec& spec) {
  const auto& c = spec.config;
  std::vector<double> grid;
  if (spec.grid == TimeGridKind::log_tail) {
    constexpr std::size_t head = 500;
    if (c.n_points <= head + 1 || c.t_max <= 1.0) throw std::invalid_argument("log_tail grid needs t_max > 1");
    for (std::size_t i = 0; i < head; ++i) grid.push_back(static_cast<double>(i) / head);
    const std::size_t tail = c.n_points - head;
    const double log_max = std::log(c.t_max);
    for (std::size_t i = 0; i < tail; ++i) {
      grid.push_back(std::exp(log_max * static_cast<double>(i) / static_cast<double>(tail - 1)));
    }
    grid.back() = c.t_max;
  } else {
    grid = reservoir::uniform_grid(c.t_max, c.n_points);
  }
  if (spec.include_critical_times) {
    auto params = c.reservoir_params();
    const double spacing = 2.0 * std::numbers::pi /
                           std::sqrt(2.0 * params.gamma0 * params.lambda - params.lambda * params.lambda);
    const int n_max = static_cast<int>(c.t_max / spacing) + 2;
    for (double t : reservoir::critical_times(n_max, params))
      if (t <= c.t_max) grid.push_back(t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }
  return grid;
}

std::vector<CsvRow> compute_figure(const FigureSpec& spec) {
  const auto times = figure_time_grid(spec);
  std::vector<CsvRow> rows;
  const auto emit = [&](const reservoir::InitialPhi& init, const reservoir::ReservoirParams& params, double parameter) {
    for (auto measure : spec.config.measures) {
      const auto series = reservoir::discord_trace(init, params, times, measure);
      for (std::size_t i = 0; i < times.size(); ++i) {
        rows.push_back({times[i], parameter, std::string(discord::to_string(measure)), series.values[i]});
      }
    }
  };
  if (spec.delta_list.empty()) {
    for (double alpha2 : spec.config.alpha2_list) emit({alpha2, 0.0}, spec.config.reservoir_params(), alpha2);
  } else {
    for (double delta : spec.delta_list) {
      auto params = spec.config.reservoir_params();
      params.delta = delta;
      emit({spec.config.alpha2_list.front(), 0.0}, params, delta);
    }
  }
  sort_rows(rows);
  return rows;
}

FigureFiles write_figure(FigureId id, const std::filesystem::path& out_dir) {
  const FigureSpec spec = figure_spec(id);
  const std::string csv = format_csv(compute_figure(spec));
  std::filesystem::create_directories(out_dir);
  const std::string name(to_string(id));
  FigureFiles files{out_dir / (name + ".csv"), out_dir / (name + ".svg")};
  write_text(files.csv, csv);
  ChartLabels labels{spec.title, spec.delta_list.empty() ? "alpha2" : "delta/gamma0"};
  write_text(files.svg, render_svg(parse_csv(csv), labels));
  return files;
}

}  // namespace geodiscord::experiments
