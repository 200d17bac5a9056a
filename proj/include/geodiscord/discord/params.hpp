#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/core/matrix.hpp"

namespace geodiscord::discord {

/// Two-qubit X state in the basis |00>, |01>, |10>, |11> (qubit A first,
/// 1 = excited). Only the diagonal and the anti-diagonal may be nonzero.
struct XStateParams {
  double p11 = 0.0;
  double p22 = 0.0;
  double p33 = 0.0;
  double p44 = 0.0;
  Complex rho14 = 0.0;
  Complex rho23 = 0.0;

  /// Throws InvalidStateError unless populations sum to one, are
  /// nonnegative, and both 2x2 X blocks are positive.
  void validate(double tolerance = kDefaultTolerance) const;

  ComplexMatrix to_matrix() const;
  /// Reads the X entries of `rho`; throws InvalidStateError if any other
  /// entry exceeds the state's tolerance.
  static XStateParams from_matrix(const DensityMatrix& rho);
};

/// Bell-diagonal state (I (x) I + sum_i c_i sigma_i (x) sigma_i) / 4.
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  /// Throws InvalidStateError when the correlation triple lies outside the
  /// tetrahedron of physical states.
  void validate(double tolerance = kDefaultTolerance) const;

  ComplexMatrix to_matrix() const;
  XStateParams to_x_state() const;
};

/// True when every entry off the diagonal and anti-diagonal is below `tolerance`.
bool is_x_form(const ComplexMatrix& rho, double tolerance = kDefaultTolerance);

}  // namespace geodiscord::discord
