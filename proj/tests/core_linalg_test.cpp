#include <doctest.h>

#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/linalg.hpp"
#include "geodiscord/core/pauli.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

using namespace geodiscord;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(z).householderQ();
  ComplexMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = q(i, j);
  return u;
}

DensityMatrix random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (auto& z : a.data()) z = Complex(g(rng), g(rng));
  ComplexMatrix m = a * a.adjoint();
  m *= 1.0 / m.trace().real();
  return DensityMatrix(m);
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

DensityMatrix ket_state(std::vector<Complex> v) { return DensityMatrix::from_pure(v); }

}  // namespace

TEST_CASE("herm_eig on fixed inputs") {
  auto e = herm_eig(pauli::sigma3());
  CHECK(e.values == std::vector<double>{1.0, -1.0});

  e = herm_eig(ComplexMatrix::identity(4) * Complex(0.5));
  for (double v : e.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-15));

  e = herm_eig(pauli::sigma1());
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(-1.0));
  const double r = 1.0 / std::sqrt(2.0);
  // eigenvectors are fixed up to a phase
  CHECK(std::abs(std::abs(e.vectors(0, 0)) - r) < 1e-12);
  CHECK(std::abs(e.vectors(0, 0) - e.vectors(1, 0)) < 1e-12);
  CHECK(std::abs(e.vectors(0, 1) + e.vectors(1, 1)) < 1e-12);

  ComplexMatrix bad = pauli::sigma1();
  bad(0, 1) = 2.0;
  CHECK_THROWS_AS(herm_eig(bad), InvalidStateError);
  CHECK_THROWS_AS(herm_eig(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("herm_eig agrees with Eigen and reconstructs the input") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2u, 3u, 4u, 6u, 8u}) {
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix h = random_hermitian(rng, n);
      const auto sys = herm_eig(h);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(h));
      const auto ref_values = ref.eigenvalues();
      const double scale = std::max(std::abs(ref_values(0)), std::abs(ref_values(n - 1)));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(sys.values[i] - ref_values(n - 1 - i)) < 1e-12 * scale);
        if (i > 0) CHECK(sys.values[i] <= sys.values[i - 1]);
      }
      std::vector<double> v = sys.values;
      const ComplexMatrix back = sys.vectors * ComplexMatrix::diagonal(v) * sys.vectors.adjoint();
      CHECK(max_abs_diff(back, h) < 1e-12 * scale);
      CHECK(max_abs_diff(sys.vectors.adjoint() * sys.vectors, ComplexMatrix::identity(n)) < 1e-12);
      CHECK(herm_eigenvalues(h) == sys.values);
    }
  }
}

TEST_CASE("eigenvalues of a density matrix sum to one") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 50; ++k) {
    const auto rho = random_state(rng, 4);
    double sum = 0.0;
    for (double v : herm_eigenvalues(rho.matrix())) sum += v;
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}

TEST_CASE("matrix_sqrt_psd") {
  const double half = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(matrix_sqrt_psd(DensityMatrix::maximally_mixed(2)),
                     ComplexMatrix::identity(2) * Complex(half)) < 1e-15);

  const auto p = ket_state({Complex(0.6, 0.0), Complex(0.0, 0.8)});
  CHECK(max_abs_diff(matrix_sqrt_psd(p), p.matrix()) < 1e-12);

  const double d[] = {0.25, 0.75};
  const double s[] = {0.5, std::sqrt(0.75)};
  CHECK(max_abs_diff(matrix_sqrt_psd(DensityMatrix(ComplexMatrix::diagonal(d))), ComplexMatrix::diagonal(s)) <
        1e-15);

  // numerical dust below zero is clamped, larger negatives are rejected
  const double dust[] = {1.0, -5e-10};
  CHECK(matrix_sqrt_psd(ComplexMatrix::diagonal(dust))(1, 1) == Complex(0.0));
  const double negative[] = {1.0, -1e-6};
  CHECK_THROWS_AS(matrix_sqrt_psd(ComplexMatrix::diagonal(negative)), InvalidStateError);

  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    const auto rho = random_state(rng, 4);
    const auto root = matrix_sqrt_psd(rho);
    CHECK(max_abs_diff(root * root, rho.matrix()) < 1e-12);
    CHECK(hermiticity_defect(root) < 1e-14);
  }
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(pauli::sigma3()) == doctest::Approx(2.0));
  CHECK(trace_norm(ComplexMatrix(4, 4)) == 0.0);
  const auto zero = ket_state({1.0, 0.0});
  const auto one = ket_state({0.0, 1.0});
  CHECK(trace_norm(zero.matrix() - one.matrix()) == doctest::Approx(2.0));
  // non-Hermitian: sum of singular values
  ComplexMatrix nilpotent(2, 2, {0.0, 3.0, 0.0, 0.0});
  CHECK(trace_norm(nilpotent) == doctest::Approx(3.0));

  std::mt19937_64 rng(14);
  for (int k = 0; k < 30; ++k) {
    const ComplexMatrix x = random_hermitian(rng, 4);
    const ComplexMatrix y = random_hermitian(rng, 4);
    const double nx = trace_norm(x);
    CHECK(nx >= 0.0);
    CHECK(trace_norm(x * Complex(-2.5)) == doctest::Approx(2.5 * nx).epsilon(1e-12));
    CHECK(trace_norm(x + y) <= nx + trace_norm(y) + 1e-12);
    const auto u = random_unitary(rng, 4);
    const auto v = random_unitary(rng, 4);
    CHECK(std::abs(trace_norm(u * x * v) - nx) < 1e-9);

    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(u * x * v));
    CHECK(std::abs(svd.singularValues().sum() - nx) < 1e-9);
  }
}

TEST_CASE("partial_trace") {
  const auto ground = ket_state({1.0, 0.0, 0.0, 0.0});
  const double proj0[] = {1.0, 0.0};
  CHECK(partial_trace(ground, 2, 2, Subsystem::A).matrix() == ComplexMatrix::diagonal(proj0));

  const double r = 1.0 / std::sqrt(2.0);
  const auto bell = ket_state({r, 0.0, 0.0, r});
  CHECK(max_abs_diff(partial_trace(bell, 2, 2, Subsystem::A).matrix(), DensityMatrix::maximally_mixed(2).matrix()) <
        1e-15);

  std::mt19937_64 rng(15);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_state(rng, 2);
    const auto b = random_state(rng, 3);
    const DensityMatrix ab(kron(a.matrix(), b.matrix()));
    CHECK(max_abs_diff(partial_trace(ab, 2, 3, Subsystem::B).matrix(), b.matrix()) < 1e-14);
    CHECK(max_abs_diff(partial_trace(ab, 2, 3, Subsystem::A).matrix(), a.matrix()) < 1e-14);

    const auto rho = random_state(rng, 6);
    const auto ra = partial_trace(rho, 2, 3, Subsystem::A);
    const auto rb = partial_trace(rho, 2, 3, Subsystem::B);
    CHECK(std::abs(partial_trace(ra.matrix(), 1, 2, Subsystem::A).trace() - 1.0) < 1e-12);
    CHECK(std::abs(partial_trace(rb.matrix(), 3, 1, Subsystem::B).trace() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(partial_trace(ground, 3, 2, Subsystem::A), DimensionError);
}

TEST_CASE("uhlmann_fidelity") {
  const auto zero = ket_state({1.0, 0.0});
  const auto one = ket_state({0.0, 1.0});
  CHECK(uhlmann_fidelity(zero, zero) == doctest::Approx(1.0));
  CHECK(uhlmann_fidelity(zero, one) == doctest::Approx(0.0));
  CHECK(uhlmann_fidelity(zero, DensityMatrix::maximally_mixed(2)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(uhlmann_fidelity(zero, DensityMatrix::maximally_mixed(4)), DimensionError);

  std::mt19937_64 rng(16);
  std::normal_distribution<double> g;
  for (int k = 0; k < 30; ++k) {
    std::vector<Complex> psi(4), phi(4);
    double np = 0, nf = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      psi[i] = Complex(g(rng), g(rng));
      phi[i] = Complex(g(rng), g(rng));
      np += std::norm(psi[i]);
      nf += std::norm(phi[i]);
    }
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      psi[i] /= std::sqrt(np);
      phi[i] /= std::sqrt(nf);
      overlap += std::conj(psi[i]) * phi[i];
    }
    const auto a = ket_state(psi);
    const auto b = ket_state(phi);
    CHECK(std::abs(uhlmann_fidelity(a, b) - std::norm(overlap)) < 1e-9);

    const auto rho = random_state(rng, 4);
    const auto sigma = random_state(rng, 4);
    const double f = uhlmann_fidelity(rho, sigma);
    CHECK(std::abs(f - uhlmann_fidelity(sigma, rho)) < 1e-9);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
    CHECK(uhlmann_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));

    // (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 written out with Eigen
    const Eigen::MatrixXcd sr = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(to_eigen(rho.matrix())).operatorSqrt();
    const Eigen::MatrixXcd inner = sr * to_eigen(sigma.matrix()) * sr;
    const auto ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(inner).eigenvalues();
    double root_sum = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) root_sum += std::sqrt(std::max(ev(i), 0.0));
    CHECK(std::abs(f - root_sum * root_sum) < 1e-9);
  }
}
