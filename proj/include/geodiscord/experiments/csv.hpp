#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace geodiscord::experiments {

/// One sample: `parameter` is alpha^2, or delta/gamma0 for detuning sweeps.
struct CsvRow {
  double scaled_time = 0.0;
  double parameter = 0.0;
  std::string measure;
  double value = 0.0;

  bool operator==(const CsvRow&) const = default;
};

inline constexpr std::string_view kCsvHeader = "scaled_time,alpha2_or_delta,measure,value";

/// Header plus one `%.12e,%.12e,<measure>,%.12e` line per row, LF endings.
std::string format_csv(const std::vector<CsvRow>& rows);
/// Inverse of format_csv; throws ConfigError with the line number on bad input.
std::vector<CsvRow> parse_csv(std::string_view text);

/// Orders rows by (parameter, measure, scaled_time).
void sort_rows(std::vector<CsvRow>& rows);

}  // namespace geodiscord::experiments
