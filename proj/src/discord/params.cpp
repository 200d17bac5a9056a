#include "geodiscord/discord/params.hpp"

#include "geodiscord/core/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace geodiscord::discord {

void XStateParams::validate(double tolerance) const {
  const double sum = p11 + p22 + p33 + p44;
  if (std::abs(sum - 1.0) > tolerance) {
    throw InvalidStateError("X state populations sum to " + std::to_string(sum) + ", expected 1");
  }
  for (double p : {p11, p22, p33, p44}) {
    if (p < -tolerance) throw InvalidStateError("X state has a negative population");
  }
  if (p11 * p44 < std::norm(rho14) - tolerance) {
    throw InvalidStateError("X state outer block is not positive: p11 p44 < |rho14|^2");
  }
  if (p22 * p33 < std::norm(rho23) - tolerance) {
    throw InvalidStateError("X state inner block is not positive: p22 p33 < |rho23|^2");
  }
}

ComplexMatrix XStateParams::to_matrix() const {
  ComplexMatrix m(4, 4);
  m(0, 0) = p11;
  m(1, 1) = p22;
  m(2, 2) = p33;
  m(3, 3) = p44;
  m(0, 3) = rho14;
  m(3, 0) = std::conj(rho14);
  m(1, 2) = rho23;
  m(2, 1) = std::conj(rho23);
  return m;
}

bool is_x_form(const ComplexMatrix& rho, double tolerance) {
  if (rho.rows() != 4 || rho.cols() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(rho(i, j)) > tolerance) return false;
    }
  return true;
}

XStateParams XStateParams::from_matrix(const DensityMatrix& rho) {
  if (!is_x_form(rho.matrix(), rho.tolerance())) {
    throw InvalidStateError("state is not of X form");
  }
  XStateParams x;
  x.p11 = rho(0, 0).real();
  x.p22 = rho(1, 1).real();
  x.p33 = rho(2, 2).real();
  x.p44 = rho(3, 3).real();
  x.rho14 = rho(0, 3);
  x.rho23 = rho(1, 2);
  return x;
}

void BellDiagonalParams::validate(double tolerance) const {
  for (double c : {c1, c2, c3}) {
    if (std::abs(c) > 1.0 + tolerance) throw InvalidStateError("Bell-diagonal correlation outside [-1, 1]");
  }
  const std::array<double, 4> weights = {
      (1.0 - c1 - c2 - c3) / 4.0,
      (1.0 - c1 + c2 + c3) / 4.0,
      (1.0 + c1 - c2 + c3) / 4.0,
      (1.0 + c1 + c2 - c3) / 4.0,
  };
  for (double w : weights) {
    if (w < -tolerance) {
      throw InvalidStateError("Bell-diagonal correlations (" + std::to_string(c1) + ", " +
                              std::to_string(c2) + ", " + std::to_string(c3) +
                              ") lie outside the physical tetrahedron");
    }
  }
}

XStateParams BellDiagonalParams::to_x_state() const {
  XStateParams x;
  x.p11 = x.p44 = (1.0 + c3) / 4.0;
  x.p22 = x.p33 = (1.0 - c3) / 4.0;
  x.rho14 = (c1 - c2) / 4.0;
  x.rho23 = (c1 + c2) / 4.0;
  return x;
}

ComplexMatrix BellDiagonalParams::to_matrix() const { return to_x_state().to_matrix(); }

}  // namespace geodiscord::discord
