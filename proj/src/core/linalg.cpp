#include "geodiscord/core/linalg.hpp"

#include "geodiscord/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace geodiscord {
namespace {

constexpr int kMaxSweeps = 64;

double frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

// Diagonalizes the Hermitian part of `a` in place. When `vectors` is non-null
// it accumulates the rotations so that a_in = V diag V^dagger.
void jacobi(ComplexMatrix& a, ComplexMatrix* vectors) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
  }
  const double scale = frobenius(a);
  if (scale == 0.0) return;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double r = std::abs(g);
        if (r <= 1e-300) continue;
        const Complex phase = g / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // V restricted to (p, q): [[c, s], [-s conj(phase), c conj(phase)]].
        const Complex vqp = -s * std::conj(phase);
        const Complex vqq = c * std::conj(phase);

        // A <- A V (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * vqp;
          a(k, q) = akp * s + akq * vqq;
        }
        // A <- V^dagger A (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(vqp) * aqk;
          a(q, k) = s * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;

        if (vectors != nullptr) {
          ComplexMatrix& v = *vectors;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * c + vkq * vqp;
            v(k, q) = vkp * s + vkq * vqq;
          }
        }
      }
    }
  }
  if (off_diagonal_norm(a) > 1e-12 * scale) throw NumericalError("Jacobi eigensolver did not converge");
}

void check_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix is not square");
}

}  // namespace

EigenSystem herm_eig(const ComplexMatrix& h, double tolerance) {
  check_square(h, "herm_eig");
  double magnitude = 1.0;
  for (const auto& z : h.data()) magnitude = std::max(magnitude, std::abs(z));
  const double defect = hermiticity_defect(h);
  if (defect > tolerance * magnitude) {
    throw InvalidStateError("herm_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi(a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> herm_eigenvalues(const ComplexMatrix& h) {
  check_square(h, "herm_eigenvalues");
  ComplexMatrix a = h;
  jacobi(a, nullptr);
  std::vector<double> values(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& psd, double tolerance) {
  const EigenSystem eig = herm_eig(psd, tolerance);
  const std::size_t n = psd.rows();
  ComplexMatrix out(n, n);
  // Eigenvalues at roundoff level are zero: keeping them would leak
  // sqrt(eps) ~ 1e-8 into the root.
  const double dust = 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                      std::max(0.0, eig.values.empty() ? 0.0 : eig.values.front());
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.values[k];
    if (lambda < -tolerance) {
      throw InvalidStateError("matrix_sqrt_psd: negative eigenvalue " + std::to_string(lambda));
    }
    if (lambda <= dust) continue;
    const double root = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = root * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

ComplexMatrix matrix_sqrt_psd(const DensityMatrix& rho) {
  return matrix_sqrt_psd(rho.matrix(), rho.tolerance());
}

double trace_norm(const ComplexMatrix& x) {
  check_square(x, "trace_norm");
  double magnitude = 0.0;
  for (const auto& z : x.data()) magnitude = std::max(magnitude, std::abs(z));
  if (magnitude == 0.0) return 0.0;

  if (hermiticity_defect(x) <= 1e-14 * magnitude) {
    double sum = 0.0;
    for (double lambda : herm_eigenvalues(x)) sum += std::abs(lambda);
    return sum;
  }
  const std::size_t n = x.rows();
  ComplexMatrix dilation(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dilation(i, n + j) = x(i, j);
      dilation(n + j, i) = std::conj(x(i, j));
    }
  // Spectrum of the dilation is {+s_k, -s_k}.
  double sum = 0.0;
  for (double lambda : herm_eigenvalues(dilation)) sum += std::abs(lambda);
  return 0.5 * sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  check_square(rho, "partial_trace");
  if (dim_a * dim_b != rho.rows()) {
    throw DimensionError("partial_trace: " + std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                         " does not match dimension " + std::to_string(rho.rows()));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j)
        for (std::size_t k = 0; k < dim_b; ++k) out(i, j) += rho(i * dim_b + k, j * dim_b + k);
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t i = 0; i < dim_b; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t k = 0; k < dim_a; ++k) out(i, j) += rho(k * dim_b + i, k * dim_b + j);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dim_a, dim_b, keep), rho.tolerance());
}

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& chi) {
  if (rho.dim() != chi.dim()) {
    throw DimensionError("uhlmann_fidelity: dimensions " + std::to_string(rho.dim()) + " and " +
                         std::to_string(chi.dim()) + " differ");
  }
  const double root_fidelity = trace_norm(matrix_sqrt_psd(rho) * matrix_sqrt_psd(chi));
  return std::clamp(root_fidelity * root_fidelity, 0.0, 1.0);
}

}  // namespace geodiscord
