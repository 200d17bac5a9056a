#include "geodiscord/experiments/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <string_view>
#include <utility>

namespace geodiscord::experiments {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 190.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<std::string_view, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                        "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view measure_symbol(std::string_view measure) {
  if (measure == "trace") return "D_T";
  if (measure == "bures") return "D_B";
  return measure;
}

}  // namespace

std::string render_svg(const std::vector<CsvRow>& rows, const ChartLabels& labels) {
  // Groups in first-appearance order.
  std::vector<std::pair<std::string, double>> keys;
  std::map<std::pair<std::string, double>, std::vector<std::pair<double, double>>> groups;
  double t_max = 0.0;
  double y_max = 0.0;
  for (const auto& r : rows) {
    const auto key = std::make_pair(r.measure, r.parameter);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) keys.push_back(key);
    it->second.emplace_back(r.scaled_time, r.value);
    t_max = std::max(t_max, r.scaled_time);
    y_max = std::max(y_max, r.value);
  }
  if (t_max <= 0.0) t_max = 1.0;
  y_max = std::max(1.0, std::ceil(y_max * 10.0) / 10.0);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double t) { return kLeft + plot_w * t / t_max; };
  const auto py = [&](double v) { return kTop + plot_h * (1.0 - v / y_max); };

  std::string measures_label;
  for (const auto& k : keys) {
    const std::string sym(measure_symbol(k.first));
    if (measures_label.find(sym) == std::string::npos) {
      if (!measures_label.empty()) measures_label += ", ";
      measures_label += sym;
    }
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" height=\"500\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt("%.2f", kLeft + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         escape(labels.title) + "</text>\n";

  // Axes and ticks.
  svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kTop + plot_h) + "\" x2=\"" +
         fmt("%.2f", kLeft + plot_w) + "\" y2=\"" + fmt("%.2f", kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kTop) + "\" x2=\"" + fmt("%.2f", kLeft) +
         "\" y2=\"" + fmt("%.2f", kTop + plot_h) + "\"/>\n";
  svg += "</g>\n<g font-size=\"11\" text-anchor=\"middle\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double t = t_max * i / 5.0;
    svg += "<text x=\"" + fmt("%.2f", px(t)) + "\" y=\"" + fmt("%.2f", kTop + plot_h + 16) + "\">" +
           fmt("%g", t) + "</text>\n";
    const double v = y_max * i / 5.0;
    svg += "<text x=\"" + fmt("%.2f", kLeft - 22) + "\" y=\"" + fmt("%.2f", py(v) + 4) + "\">" + fmt("%.2f", v) +
           "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"" + fmt("%.2f", kLeft + plot_w / 2) + "\" y=\"" + fmt("%.2f", kHeight - 16) +
         "\" text-anchor=\"middle\" font-size=\"14\">&#947;&#8320;t</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt("%.2f", kTop + plot_h / 2) + "\" text-anchor=\"middle\" font-size=\"14\" " +
         "transform=\"rotate(-90 18 " + fmt("%.2f", kTop + plot_h / 2) + ")\">" + escape(measures_label) +
         "</text>\n";

  for (std::size_t g = 0; g < keys.size(); ++g) {
    const auto& pts = groups.at(keys[g]);
    const std::string_view colour = kPalette[g % kPalette.size()];
    const bool dashed = keys[g].first == "bures";
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\"";
    if (dashed) svg += " stroke-dasharray=\"6 3\"";
    svg += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) svg += ' ';
      svg += fmt("%.2f", px(pts[i].first)) + "," + fmt("%.2f", py(pts[i].second));
    }
    svg += "\"/>\n";

    const double ly = kTop + 10 + 18.0 * static_cast<double>(g);
    const double lx = kWidth - kRight + 15;
    svg += "<line x1=\"" + fmt("%.2f", lx) + "\" y1=\"" + fmt("%.2f", ly) + "\" x2=\"" + fmt("%.2f", lx + 25) +
           "\" y2=\"" + fmt("%.2f", ly) + "\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\"" +
           (dashed ? " stroke-dasharray=\"6 3\"" : "") + "/>\n";
    svg += "<text x=\"" + fmt("%.2f", lx + 30) + "\" y=\"" + fmt("%.2f", ly + 4) + "\" font-size=\"11\">" +
           escape(std::string(measure_symbol(keys[g].first)) + " " + labels.parameter_name + "=" +
                  fmt("%g", keys[g].second)) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace geodiscord::experiments
