#include "geodiscord/core/density_matrix.hpp"

#include "geodiscord/core/errors.hpp"
#include "geodiscord/core/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace geodiscord {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tolerance)
    : matrix_(std::move(matrix)), tolerance_(tolerance) {
  if (!matrix_.is_square() || matrix_.rows() == 0) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > tolerance_) {
    throw InvalidStateError("density matrix is not Hermitian (max |rho_ij - conj(rho_ji)| = " +
                            sci(defect) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tolerance_) {
    throw InvalidStateError("density matrix trace is " + sci(tr.real()) + ", expected 1");
  }
  const double smallest = herm_eigenvalues(matrix_).back();
  if (smallest < -tolerance_) {
    throw InvalidStateError("density matrix is not positive semidefinite (eigenvalue " + sci(smallest) +
                            ")");
  }
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> amplitudes, double tolerance) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > tolerance) {
    throw InvalidStateError("state vector is not normalized (norm " + sci(std::sqrt(norm2)) + ")");
  }
  return DensityMatrix(ComplexMatrix::projector(amplitudes), tolerance);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  return DensityMatrix(ComplexMatrix::identity(n) * Complex(1.0 / static_cast<double>(n)));
}

}  // namespace geodiscord
