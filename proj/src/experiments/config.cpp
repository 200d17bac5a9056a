#include "geodiscord/experiments/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace geodiscord::experiments {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> items;
  if (trim(s).empty()) return items;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    items.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

double parse_real(const std::string& text, std::size_t line, std::string_view key) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(line, std::string(key) + ": '" + text + "' is not a number");
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, std::size_t line, std::string_view key) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(line, std::string(key) + ": '" + text + "' is not a nonnegative integer");
  }
  return v;
}

std::vector<double> parse_real_list(const std::string& value, std::size_t line, std::string_view key) {
  std::vector<double> out;
  for (const auto& item : split_list(value)) out.push_back(parse_real(item, line, key));
  return out;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

void ExperimentConfig::validate() const {
  if (alpha2_list.empty()) throw ConfigError(0, "alpha2_list must be non-empty");
  for (double a : alpha2_list) {
    if (!(a >= 0.0 && a <= 1.0)) throw ConfigError(0, "every alpha2 must lie in [0, 1]");
  }
  if (measures.empty()) throw ConfigError(0, "measures must be non-empty");
  if (!(lambda_over_gamma0 > 0.0)) throw ConfigError(0, "lambda_over_gamma0 must be positive");
  if (!(delta_over_gamma0 >= 0.0)) throw ConfigError(0, "delta_over_gamma0 must be nonnegative");
  if (times.empty()) {
    if (n_points < 2) throw ConfigError(0, "n_points must be at least 2");
    if (!(t_max > 0.0)) throw ConfigError(0, "t_max must be positive");
  } else {
    try {
      reservoir::validate_time_grid(times);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(0, std::string("times: ") + e.what());
    }
  }
}

std::vector<double> ExperimentConfig::time_grid() const {
  if (!times.empty()) return times;
  return reservoir::uniform_grid(t_max, n_points);
}

reservoir::ReservoirParams ExperimentConfig::reservoir_params() const {
  reservoir::ReservoirParams p;
  p.gamma0 = 1.0;
  p.lambda = lambda_over_gamma0;
  p.delta = delta_over_gamma0;
  p.topology = topology;
  return p;
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(std::string_view(raw).substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "missing key");
    if (!seen.insert(key).second) throw ConfigError(line, "duplicate key '" + key + "'");

    if (key == "topology") {
      const auto t = reservoir::parse_topology(value);
      if (!t) throw ConfigError(line, "topology must be 'independent' or 'common'");
      config.topology = *t;
    } else if (key == "lambda_over_gamma0") {
      config.lambda_over_gamma0 = parse_real(value, line, key);
    } else if (key == "delta_over_gamma0") {
      config.delta_over_gamma0 = parse_real(value, line, key);
    } else if (key == "alpha2_list") {
      config.alpha2_list = parse_real_list(value, line, key);
    } else if (key == "t_max") {
      config.t_max = parse_real(value, line, key);
    } else if (key == "n_points") {
      config.n_points = static_cast<std::size_t>(parse_unsigned(value, line, key));
    } else if (key == "measures") {
      config.measures.clear();
      for (const auto& item : split_list(value)) {
        const auto m = discord::parse_measure(item);
        if (!m) throw ConfigError(line, "unknown measure '" + item + "' (expected trace or bures)");
        if (std::find(config.measures.begin(), config.measures.end(), *m) == config.measures.end()) {
          config.measures.push_back(*m);
        }
      }
    } else if (key == "seed") {
      config.seed = parse_unsigned(value, line, key);
    } else if (key == "output_dir") {
      if (value.empty()) throw ConfigError(line, "output_dir is empty");
      config.output_dir = value;
    } else if (key == "times") {
      config.times = parse_real_list(value, line, key);
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace geodiscord::experiments
