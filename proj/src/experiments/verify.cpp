#include "geodiscord/experiments/verify.hpp"

#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/linalg.hpp"
#include "geodiscord/discord/bures.hpp"
#include "geodiscord/discord/dispatch.hpp"
#include "geodiscord/discord/trace_distance.hpp"
#include "geodiscord/experiments/sampling.hpp"
#include "geodiscord/reservoir/common.hpp"
#include "geodiscord/reservoir/discord_trace.hpp"
#include "geodiscord/reservoir/independent.hpp"
#include "geodiscord/reservoir/pseudomode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace geodiscord::experiments {
namespace {

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) { return u * m * u.adjoint(); }

// Runs `sample` n times and keeps the largest deviation. A sample that throws
// counts as an infinite deviation.
SuiteResult suite(std::string name, std::size_t n, double bound, const std::function<double()>& sample) {
  SuiteResult r{std::move(name), n, 0.0, bound, false};
  for (std::size_t i = 0; i < n; ++i) {
    double dev;
    try {
      dev = sample();
    } catch (const std::exception&) {
      dev = std::numeric_limits<double>::infinity();
    }
    if (std::isnan(dev)) dev = std::numeric_limits<double>::infinity();
    r.worst = std::max(r.worst, dev);
  }
  r.passed = r.worst < bound;
  return r;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::string VerifyReport::format() const {
  std::string out = "seed " + std::to_string(seed) + "\n";
  char buf[256];
  for (const auto& s : suites) {
    std::snprintf(buf, sizeof buf, "[%s] %-44s samples=%-5zu worst=%.3e bound=%.1e\n", s.passed ? "PASS" : "FAIL",
                  s.name.c_str(), s.samples, s.worst, s.bound);
    out += buf;
  }
  out += passed() ? "all suites passed\n" : "some suites FAILED\n";
  return out;
}

VerifyReport run_verification(std::uint64_t seed, std::size_t samples) {
  VerifyReport report;
  report.seed = seed;
  Rng rng(seed);
  const discord::MeasurementGrid grid;

  report.suites.push_back(suite("bell-diagonal: x-state trace formula", 10 * samples, 1e-12, [&] {
    const auto c = random_bell_diagonal(rng);
    return std::abs(discord::dt_xstate(c.to_x_state()) - discord::dt_bell_diagonal(c));
  }));

  report.suites.push_back(suite("bell-diagonal: fidelity maximum vs search", samples, 1e-6, [&] {
    const auto c = random_bell_diagonal(rng);
    const DensityMatrix rho(c.to_matrix());
    return std::abs(discord::fmax_2xn(rho, 2, grid).fmax - discord::fmax_bell_diagonal(c));
  }));

  report.suites.push_back(suite("pure states: fidelity maximum vs Schmidt", samples, 1e-6, [&] {
    const auto psi = random_pure_state(rng, 4);
    return std::abs(discord::fmax_2xn(DensityMatrix::from_pure(psi), 2, grid).fmax - discord::fmax_pure(psi, 2));
  }));

  report.suites.push_back(suite("x states: measurement search vs closed form", samples, 1e-3, [&] {
    const auto x = random_x_state(rng);
    const double closed = discord::dt_xstate(x);
    const double search = discord::dt_measurement_oracle(DensityMatrix(x.to_matrix()), grid);
    // The search ranges over a subset of classical-quantum states.
    if (search < closed - 1e-9) return std::numeric_limits<double>::infinity();
    return std::abs(search - closed);
  }));

  report.suites.push_back(suite("local unitary invariance (both measures)", samples, 1e-6, [&] {
    const auto rho = random_density_matrix(rng, 4, 4);
    const ComplexMatrix u = kron(random_unitary(rng, 2), random_unitary(rng, 2));
    const DensityMatrix rotated(conjugate(u, rho.matrix()));
    double worst = 0.0;
    for (auto m : {discord::Measure::trace, discord::Measure::bures}) {
      worst = std::max(worst, std::abs(discord::evaluate_measure(rho, m, discord::Method::automatic, grid).value -
                                       discord::evaluate_measure(rotated, m, discord::Method::automatic, grid).value));
    }
    return worst;
  }));

  report.suites.push_back(suite("fidelity symmetry", samples, 1e-9, [&] {
    const auto a = random_density_matrix(rng, 4, 4);
    const auto b = random_density_matrix(rng, 4, 4);
    return std::abs(uhlmann_fidelity(a, b) - uhlmann_fidelity(b, a));
  }));

  report.suites.push_back(suite("trace norm unitary invariance", samples, 1e-9, [&] {
    const auto h = random_density_matrix(rng, 4, 4).matrix() - random_density_matrix(rng, 4, 4).matrix();
    const ComplexMatrix u = random_unitary(rng, 4);
    const ComplexMatrix v = random_unitary(rng, 4);
    return std::abs(trace_norm(u * h * v) - trace_norm(h));
  }));

  report.suites.push_back(suite("kraus completeness", samples, 1e-12, [&] {
    std::uniform_real_distribution<double> t(0.0, 60.0);
    const reservoir::ReservoirParams p{1.0, 0.1, 0.0, reservoir::Topology::independent};
    const auto k = reservoir::damping_kraus(reservoir::amplitude_independent(t(rng), p));
    const ComplexMatrix sum = k[0].adjoint() * k[0] + k[1].adjoint() * k[1];
    return max_abs_diff(sum, ComplexMatrix::identity(2));
  }));

  {
    const std::vector<double> times = reservoir::uniform_grid(50.0, 501);
    const reservoir::ReservoirParams p{1.0, 0.1, 0.0, reservoir::Topology::common};
    std::size_t idx = 0;
    const double alphas[] = {0.0, 0.1, 0.5};
    report.suites.push_back(suite("pseudomode integration vs closed form", 3, 1e-6, [&] {
      const reservoir::InitialPhi init{alphas[idx++], 0.0};
      const auto ode = reservoir::ode_oracle_common(init, times, p);
      double worst = 0.0;
      for (std::size_t i = 0; i < times.size(); ++i) {
        worst = std::max(worst, max_abs_diff(ode[i].matrix(), reservoir::evolve_common(init, times[i], p).matrix()));
      }
      return worst;
    }));
  }

  report.suites.push_back(suite("evolved states are valid density matrices", samples, 1e-12, [&] {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double lambdas[] = {0.1, 10.0};
    reservoir::ReservoirParams p;
    p.lambda = lambdas[u(rng) < 0.5 ? 0 : 1];
    p.delta = u(rng) < 0.5 ? 0.0 : 4.0 * u(rng);
    p.topology = u(rng) < 0.5 ? reservoir::Topology::independent : reservoir::Topology::common;
    // Construction validates Hermiticity, trace and positivity; a violation throws.
    (void)reservoir::evolve({u(rng), 0.0}, 100.0 * u(rng), p);
    return 0.0;
  }));

  return report;
}

}  // namespace geodiscord::experiments
