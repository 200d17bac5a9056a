// geodiscord: trace- and Bures-distance discord of two-qubit states and their
// dynamics in Lorentzian reservoirs.
//
//   geodiscord figure fig1b --out figures
//   geodiscord measure state.txt --measure bures --method oracle
//   geodiscord threshold
//   geodiscord verify --seed 7 --samples 100
//   geodiscord sweep sweep.conf
//
// Exit status: 0 success, 1 usage or configuration error, 2 numerical
// invariant violation.

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/matrix_io.hpp"
#include "geodiscord/discord/dispatch.hpp"
#include "geodiscord/experiments/config.hpp"
#include "geodiscord/experiments/figures.hpp"
#include "geodiscord/experiments/sweep.hpp"
#include "geodiscord/experiments/threshold.hpp"
#include "geodiscord/experiments/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

constexpr int kUsageError = 1;
constexpr int kNumericalError = 2;

int cmd_figure(const std::string& id_text, const std::string& out) {
  using namespace geodiscord::experiments;
  const auto id = parse_figure_id(id_text);
  if (!id) {
    std::cerr << "unknown figure '" << id_text << "' (expected fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig4, fig5)\n";
    return kUsageError;
  }
  const FigureFiles files = write_figure(*id, out);
  std::cout << files.csv.string() << "\n" << files.svg.string() << "\n";
  return 0;
}

int cmd_measure(const std::string& path, const std::string& measure_text, const std::string& method_text) {
  using namespace geodiscord;
  const auto measure = discord::parse_measure(measure_text);
  const auto method = discord::parse_method(method_text);
  if (!measure || !method) {
    std::cerr << "--measure must be trace|bures and --method auto|closed|oracle\n";
    return kUsageError;
  }
  ComplexMatrix m;
  try {
    m = read_matrix_file(path);
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kUsageError;
  }
  const DensityMatrix rho(std::move(m));
  const auto result = discord::evaluate_measure(rho, *measure, *method);
  std::printf("measure: %s\nroute: %s\nformula: %s\nvalue: %.12f\n", std::string(discord::to_string(*measure)).c_str(),
              std::string(discord::to_string(result.route)).c_str(), result.formula.c_str(), result.value);
  return 0;
}

int cmd_threshold() {
  std::printf("%.6f\n", geodiscord::experiments::generation_threshold());
  return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t samples) {
  const auto report = geodiscord::experiments::run_verification(seed, samples);
  std::cout << report.format();
  return report.passed() ? 0 : kNumericalError;
}

int cmd_sweep(const std::string& path) {
  const auto config = geodiscord::experiments::read_config_file(path);
  std::cout << geodiscord::experiments::write_sweep(config).string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric quantum discord of two qubits in structured reservoirs"};
  app.require_subcommand(1);

  std::string figure_id;
  std::string figure_out = ".";
  auto* figure = app.add_subcommand("figure", "Write <id>.csv and <id>.svg for a preset figure");
  figure->add_option("id", figure_id, "fig1a fig1b fig2a fig2b fig3a fig3b fig4 fig5")->required();
  figure->add_option("--out", figure_out, "Output directory");

  std::string state_file;
  std::string measure = "trace";
  std::string method = "auto";
  auto* measure_cmd = app.add_subcommand("measure", "Evaluate a discord measure on a matrix file");
  measure_cmd->add_option("file", state_file, "State file (dimension line, then rows of re+imj entries)")->required();
  measure_cmd->add_option("--measure", measure, "trace or bures")->required();
  measure_cmd->add_option("--method", method, "auto, closed or oracle");

  app.add_subcommand("threshold", "alpha^2 below which a common reservoir raises the trace discord");

  std::uint64_t seed = 20240601;
  std::size_t samples = 100;
  auto* verify = app.add_subcommand("verify", "Run the cross-check property suites");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--samples", samples, "Samples per suite")->check(CLI::PositiveNumber);

  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter sweep described by a config file");
  sweep->add_option("config", config_path, "key = value configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*figure) return cmd_figure(figure_id, figure_out);
    if (*measure_cmd) return cmd_measure(state_file, measure, method);
    if (app.got_subcommand("threshold")) return cmd_threshold();
    if (*verify) return cmd_verify(seed, samples);
    if (*sweep) return cmd_sweep(config_path);
  } catch (const geodiscord::experiments::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const geodiscord::InvalidStateError& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kNumericalError;
  } catch (const geodiscord::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const geodiscord::DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
