#pragma once

#include "geodiscord/experiments/config.hpp"
#include "geodiscord/experiments/csv.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geodiscord::experiments {

enum class FigureId { fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig4, fig5 };

inline constexpr std::array<FigureId, 8> kAllFigures = {FigureId::fig1a, FigureId::fig1b, FigureId::fig2a,
                                                        FigureId::fig2b, FigureId::fig3a, FigureId::fig3b,
                                                        FigureId::fig4,  FigureId::fig5};

enum class TimeGridKind {
  uniform,      ///< n_points evenly over [0, t_max]
  log_tail,     ///< 500 points on [0, 1), then n_points - 500 log-spaced over [1, t_max]
};

struct FigureSpec {
  FigureId id;
  std::string title;
  ExperimentConfig config;
  /// Non-empty for detuning figures: one curve per delta/gamma0 at config.alpha2_list[0].
  std::vector<double> delta_list;
  TimeGridKind grid = TimeGridKind::uniform;
  /// Add the zeros of q(t) inside [0, t_max] to the grid.
  bool include_critical_times = false;
};

std::string_view to_string(FigureId id);
std::optional<FigureId> parse_figure_id(std::string_view text);

/// Frozen presets.
FigureSpec figure_spec(FigureId id);

std::vector<double> figure_time_grid(const FigureSpec& spec);

/// Computes the figure's samples, sorted by (parameter, measure, time).
std::vector<CsvRow> compute_figure(const FigureSpec& spec);

struct FigureFiles {
  std::filesystem::path csv;
  std::filesystem::path svg;
};

/// Writes <id>.csv and <id>.svg into `out_dir` (created if needed). The SVG
/// is rendered from the CSV text, so re-plotting the CSV gives the same chart.
FigureFiles write_figure(FigureId id, const std::filesystem::path& out_dir);

}  // namespace geodiscord::experiments
