#include <doctest.h>

#include "geodiscord/core/errors.hpp"
#include "geodiscord/discord/bures.hpp"
#include "geodiscord/discord/params.hpp"
#include "geodiscord/discord/trace_distance.hpp"
#include "geodiscord/experiments/sampling.hpp"

#include <cmath>
#include <numbers>

using namespace geodiscord;
using namespace geodiscord::discord;

namespace {

XStateParams phi_state(double alpha2) {
  XStateParams x;
  x.p22 = 1.0 - alpha2;
  x.p33 = alpha2;
  x.rho23 = std::sqrt(alpha2 * (1.0 - alpha2));
  return x;
}

}  // namespace

TEST_CASE("dt_xstate") {
  CHECK(dt_xstate(phi_state(0.5)) == doctest::Approx(1.0).epsilon(1e-15));
  for (double a2 : {0.0, 0.1, 0.3, 0.9, 1.0}) {
    CHECK(dt_xstate(phi_state(a2)) == doctest::Approx(2.0 * std::sqrt(a2 * (1.0 - a2))).epsilon(1e-12));
  }

  XStateParams diagonal;
  diagonal.p11 = 0.1;
  diagonal.p22 = 0.2;
  diagonal.p33 = 0.3;
  diagonal.p44 = 0.4;
  CHECK(dt_xstate(diagonal) == 0.0);

  // (0.5, 0.4, 0.3) has a negative weight on |psi->; the sign-flipped triple is physical
  const BellDiagonalParams c{0.5, -0.4, 0.3};
  CHECK(dt_xstate(c.to_x_state()) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(dt_bell_diagonal(c) == doctest::Approx(0.4).epsilon(1e-15));

  XStateParams bad = phi_state(0.5);
  bad.rho23 = 0.6;
  CHECK_THROWS_AS(dt_xstate(bad), InvalidStateError);
  bad = phi_state(0.5);
  bad.p11 = 0.1;
  CHECK_THROWS_AS(dt_xstate(bad), InvalidStateError);
}

TEST_CASE("dt_bell_diagonal") {
  CHECK(dt_bell_diagonal({1.0, -1.0, 1.0}) == 1.0);
  CHECK(dt_bell_diagonal({0.0, 0.0, 0.8}) == 0.0);
  CHECK(dt_bell_diagonal({-0.2, 0.1, 0.05}) == doctest::Approx(0.1));
  CHECK_THROWS_AS(dt_bell_diagonal({0.5, 0.4, 0.3}), InvalidStateError);
  CHECK_THROWS_AS(dt_bell_diagonal({1.1, 0.0, 0.0}), InvalidStateError);
}

TEST_CASE("closed forms agree on the Bell-diagonal overlap") {
  experiments::Rng rng(101);
  for (int k = 0; k < 1000; ++k) {
    const auto c = experiments::random_bell_diagonal(rng);
    CHECK(std::abs(dt_xstate(c.to_x_state()) - dt_bell_diagonal(c)) < 1e-12);
  }
}

TEST_CASE("X-state parameters round trip through the matrix") {
  experiments::Rng rng(102);
  for (int k = 0; k < 50; ++k) {
    const auto x = experiments::random_x_state(rng);
    const DensityMatrix rho(x.to_matrix());
    CHECK(is_x_form(rho.matrix()));
    const auto back = XStateParams::from_matrix(rho);
    CHECK(back.p11 == x.p11);
    CHECK(back.rho14 == x.rho14);
    CHECK(back.rho23 == x.rho23);
  }
  ComplexMatrix m = ComplexMatrix::identity(4) * Complex(0.25);
  m(0, 1) = m(1, 0) = 0.01;
  CHECK_FALSE(is_x_form(m));
  CHECK_THROWS_AS(XStateParams::from_matrix(DensityMatrix(m)), InvalidStateError);
}

TEST_CASE("db_from_fmax") {
  CHECK(db_from_fmax(1.0) == 0.0);
  CHECK(db_from_fmax(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(db_from_fmax(0.0) == doctest::Approx(std::sqrt(2.0 + std::sqrt(2.0))));
  CHECK(db_from_fmax(1.0 + 5e-10) == 0.0);
  CHECK_THROWS_AS(db_from_fmax(1.1), InvalidStateError);
  CHECK_THROWS_AS(db_from_fmax(-0.01), InvalidStateError);
}

TEST_CASE("fmax_bell_diagonal") {
  CHECK(fmax_bell_diagonal({0.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(fmax_bell_diagonal({1.0, -1.0, 1.0}) == doctest::Approx(0.5));
  CHECK(fmax_bell_diagonal({-0.6, -0.6, -0.6}) == doctest::Approx(0.5 + 0.25 * (0.4 + std::sqrt(1.12))));
  CHECK(db_from_fmax(fmax_bell_diagonal({1.0, -1.0, 1.0})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(fmax_bell_diagonal({1.0, 1.0, 1.0}), InvalidStateError);
}

TEST_CASE("pure-state Bures discord") {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> excited_a = {0.0, 0.0, 1.0, 0.0};
  CHECK(fmax_pure(excited_a, 2) == doctest::Approx(1.0));
  CHECK(db_pure(excited_a, 2) == 0.0);

  const std::vector<Complex> phi = {0.0, r, r, 0.0};
  CHECK(fmax_pure(phi, 2) == doctest::Approx(0.5));
  CHECK(db_pure(phi, 2) == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<Complex> phi01 = {0.0, std::sqrt(0.9), std::sqrt(0.1), 0.0};
  CHECK(fmax_pure(phi01, 2) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(db_pure(phi01, 2) ==
        doctest::Approx(std::sqrt((2.0 + std::sqrt(2.0)) * (1.0 - std::sqrt(0.9)))).epsilon(1e-12));

  // 2 x 3: the reduced state of A has eigenvalues {0.7, 0.3}
  std::vector<Complex> q(6, 0.0);
  q[0] = std::sqrt(0.7);
  q[4] = Complex(0.0, std::sqrt(0.3));
  CHECK(fmax_pure(q, 3) == doctest::Approx(0.7));

  const std::vector<Complex> unnormalized = {1.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(db_pure(unnormalized, 2), InvalidStateError);
  CHECK_THROWS_AS(db_pure(phi, 3), DimensionError);
}
