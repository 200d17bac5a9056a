#include "geodiscord/experiments/csv.hpp"

#include "geodiscord/experiments/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace geodiscord::experiments {
namespace {

double field_to_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(line, "bad numeric field '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_csv(const std::vector<CsvRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12e,%.12e,", r.scaled_time, r.parameter);
    out += buf;
    out += r.measure;
    std::snprintf(buf, sizeof buf, ",%.12e\n", r.value);
    out += buf;
  }
  return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  if (!std::getline(in, line) || line != kCsvHeader) throw ConfigError(1, "missing CSV header");
  ++number;
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 4) throw ConfigError(number, "expected 4 fields");
    rows.push_back({field_to_double(fields[0], number), field_to_double(fields[1], number), fields[2],
                    field_to_double(fields[3], number)});
  }
  return rows;
}

void sort_rows(std::vector<CsvRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
    return std::tie(a.parameter, a.measure, a.scaled_time) < std::tie(b.parameter, b.measure, b.scaled_time);
  });
}

}  // namespace geodiscord::experiments
