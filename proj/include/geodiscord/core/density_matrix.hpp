#pragma once

#include "geodiscord/core/matrix.hpp"

#include <span>

namespace geodiscord {

inline constexpr double kDefaultTolerance = 1e-9;

/// A validated quantum state: Hermitian, unit trace and positive
/// semidefinite, each up to `tolerance`. Construction throws
/// InvalidStateError naming the first violated invariant.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix, double tolerance = kDefaultTolerance);

  /// |psi><psi| for a normalized state vector.
  static DensityMatrix from_pure(std::span<const Complex> amplitudes,
                                 double tolerance = kDefaultTolerance);
  /// I/n.
  static DensityMatrix maximally_mixed(std::size_t n);

  std::size_t dim() const { return matrix_.rows(); }
  double tolerance() const { return tolerance_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  ComplexMatrix matrix_;
  double tolerance_;
};

}  // namespace geodiscord
