#include <doctest.h>

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/matrix.hpp"
#include "geodiscord/core/pauli.hpp"
#include "geodiscord/core/unit_vector.hpp"

#include <cmath>
#include <numbers>
#include <string>

using namespace geodiscord;

TEST_CASE("matrix shape is fixed and access is bounds checked") {
  ComplexMatrix m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK_FALSE(m.is_square());
  m.at(1, 2) = Complex(1, 2);
  CHECK(m(1, 2) == Complex(1, 2));
  CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  CHECK_THROWS_AS(m.trace(), DimensionError);
  CHECK_THROWS_AS(m * m, DimensionError);
}

TEST_CASE("pauli algebra") {
  const auto id = pauli::identity2();
  for (const auto& s : pauli::sigmas()) CHECK(s * s == id);
  CHECK(pauli::sigma1() * pauli::sigma2() == Complex(0, 1) * pauli::sigma3());
  CHECK(pauli::sigma_plus() + pauli::sigma_minus() == pauli::sigma1());
  CHECK(pauli::sigma_plus() - pauli::sigma_minus() == Complex(0, 1) * pauli::sigma2());
  // sigma_plus = |0><1| takes the excited |1> to the ground |0>
  const std::vector<Complex> excited = {0.0, 1.0};
  const auto lowered = apply(pauli::sigma_plus(), excited);
  CHECK(lowered[0] == Complex(1.0));
  CHECK(lowered[1] == Complex(0.0));
}

TEST_CASE("kron") {
  CHECK(kron(pauli::identity2(), pauli::identity2()) == ComplexMatrix::identity(4));

  const double diag[] = {1, 1, -1, -1};
  CHECK(kron(pauli::sigma3(), pauli::identity2()) == ComplexMatrix::diagonal(diag));

  const std::vector<Complex> ket00 = {1.0, 0.0, 0.0, 0.0};
  const auto flipped = apply(kron(pauli::sigma1(), pauli::sigma1()), ket00);
  CHECK(flipped == std::vector<Complex>{0.0, 0.0, 0.0, 1.0});

  ComplexMatrix a(1, 2, {1.0, 2.0});
  ComplexMatrix b(2, 1, {3.0, Complex(0, 1)});
  const auto k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k(1, 1) == Complex(0, 2));
}

TEST_CASE("unit vector") {
  for (double theta : {0.0, 0.3, 1.7, 3.0, 4.0, -1.0}) {
    for (double phi : {0.0, 1.0, 5.9, 7.0, -2.0}) {
      const UnitVector3 u(theta, phi);
      const auto c = u.cartesian();
      CHECK(std::abs(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] - 1.0) < 1e-12);
      CHECK(u.theta() >= 0.0);
      CHECK(u.theta() <= std::numbers::pi);
      CHECK(u.phi() >= 0.0);
      CHECK(u.phi() < 2.0 * std::numbers::pi);
    }
  }
  const auto z = UnitVector3(0.0, 0.0).cartesian();
  CHECK(z[2] == 1.0);
  const auto x = UnitVector3(std::numbers::pi / 2, 0.0).cartesian();
  CHECK(x[0] == doctest::Approx(1.0));
  // theta beyond pi folds back onto the same point
  const auto a = UnitVector3(4.0, 1.0).cartesian();
  const double s = std::sin(4.0);
  CHECK(a[0] == doctest::Approx(s * std::cos(1.0)));
  CHECK(a[1] == doctest::Approx(s * std::sin(1.0)));
  CHECK(a[2] == doctest::Approx(std::cos(4.0)));
}

TEST_CASE("density matrix validation names the violated invariant") {
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25)));

  SUBCASE("hermiticity") {
    ComplexMatrix m = ComplexMatrix::identity(2) * Complex(0.5);
    m(0, 1) = 0.1;
    try {
      DensityMatrix rho(m);
      FAIL("expected an exception");
    } catch (const InvalidStateError& e) {
      CHECK(std::string(e.what()).find("Hermitian") != std::string::npos);
    }
  }
  SUBCASE("trace") {
    try {
      DensityMatrix rho(ComplexMatrix::identity(2));
      FAIL("expected an exception");
    } catch (const InvalidStateError& e) {
      CHECK(std::string(e.what()).find("trace") != std::string::npos);
    }
  }
  SUBCASE("positivity") {
    const double d[] = {1.2, -0.2};
    try {
      DensityMatrix rho(ComplexMatrix::diagonal(d));
      FAIL("expected an exception");
    } catch (const InvalidStateError& e) {
      CHECK(std::string(e.what()).find("positive") != std::string::npos);
    }
  }
  SUBCASE("tolerance is per call") {
    const double d[] = {0.5 + 1e-7, 0.5};
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal(d)), InvalidStateError);
    CHECK_NOTHROW(DensityMatrix(ComplexMatrix::diagonal(d), 1e-6));
  }
  SUBCASE("shape") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 3)), DimensionError);
  }
  SUBCASE("pure state normalization") {
    const std::vector<Complex> v = {1.0, 1.0};
    CHECK_THROWS_AS(DensityMatrix::from_pure(v), InvalidStateError);
  }
}
