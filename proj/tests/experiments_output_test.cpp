#include <doctest.h>

#include "geodiscord/experiments/config.hpp"
#include "geodiscord/experiments/csv.hpp"
#include "geodiscord/experiments/svg.hpp"
#include "geodiscord/experiments/threshold.hpp"
#include "geodiscord/experiments/verify.hpp"

#include <cmath>
#include <string>

using namespace geodiscord;
using namespace geodiscord::experiments;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("csv format") {
  std::vector<CsvRow> rows = {{0.5, 0.1, "trace", 0.25}, {0.0, 0.1, "trace", 1.0}, {0.0, 0.1, "bures", 1.0 / 3.0}};
  sort_rows(rows);
  CHECK(rows[0].measure == "bures");
  CHECK(rows[1].scaled_time == 0.0);
  const std::string text = format_csv(rows);
  CHECK(text ==
        "scaled_time,alpha2_or_delta,measure,value\n"
        "0.000000000000e+00,1.000000000000e-01,bures,3.333333333333e-01\n"
        "0.000000000000e+00,1.000000000000e-01,trace,1.000000000000e+00\n"
        "5.000000000000e-01,1.000000000000e-01,trace,2.500000000000e-01\n");
  const auto parsed = parse_csv(text);
  CHECK(parsed.size() == 3);
  CHECK(format_csv(parsed) == text);

  CHECK_THROWS_AS(parse_csv("time,value\n"), ConfigError);
  try {
    parse_csv("scaled_time,alpha2_or_delta,measure,value\n0,0,trace,1\n0,0,trace\n");
    FAIL("expected an exception");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("svg chart") {
  std::vector<CsvRow> rows;
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.5 * i;
    rows.push_back({t, 0.1, "trace", std::exp(-0.1 * t) * 0.6});
    rows.push_back({t, 0.5, "trace", std::exp(-0.2 * t)});
    rows.push_back({t, 0.5, "bures", std::exp(-0.3 * t) * std::sqrt(2.0 / 3.0)});
  }
  sort_rows(rows);
  const std::string svg = render_svg(rows, {"Test & <chart>", "alpha2"});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<polyline") == 3);
  CHECK(count(svg, "stroke-dasharray") == 2);  // bures curve and its legend entry
  CHECK(svg.find("&#947;&#8320;t") != std::string::npos);
  CHECK(svg.find("D_T, D_B") != std::string::npos);
  CHECK(svg.find("Test &amp; &lt;chart&gt;") != std::string::npos);
  CHECK(svg.find("alpha2=0.5") != std::string::npos);

  // re-plotting a parsed CSV gives the same chart
  const auto reparsed = parse_csv(format_csv(rows));
  CHECK(render_svg(parse_csv(format_csv(reparsed)), {"t", "alpha2"}) == render_svg(reparsed, {"t", "alpha2"}));
}

TEST_CASE("generation threshold") {
  CHECK(steady_gain(0.01) > 0.0);
  CHECK(steady_gain(0.5) < 0.0);
  CHECK(steady_gain(0.01) == doctest::Approx(0.5 - 3.0 * std::sqrt(0.0099)));
  const double root = generation_threshold();
  CHECK(std::abs(root - 0.0286) < 5e-4);
  CHECK(std::abs(steady_gain(root)) < 1e-4);
  // closed form: (1 - 2a)/2 = 2a with a = sqrt(x(1 - x)) gives a = 1/6
  CHECK(std::abs(root - (1.0 - std::sqrt(1.0 - 4.0 / 36.0)) / 2.0) < 1e-6);
}

TEST_CASE("verification report") {
  const auto report = run_verification(3, 2);
  CHECK(report.passed());
  CHECK(report.suites.size() == 10);
  for (const auto& s : report.suites) {
    CHECK_MESSAGE(s.passed, s.name);
    CHECK(s.samples > 0);
    CHECK(s.worst < s.bound);
  }
  const std::string text = report.format();
  CHECK(text.find("seed 3") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
}
