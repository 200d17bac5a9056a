#pragma once

#include "geodiscord/core/matrix.hpp"

#include <array>

namespace geodiscord::pauli {

// Single-qubit basis: |0> is the ground state, |1> the excited state.

inline ComplexMatrix identity2() { return ComplexMatrix::identity(2); }
inline ComplexMatrix sigma1() { return {2, 2, {0.0, 1.0, 1.0, 0.0}}; }
inline ComplexMatrix sigma2() { return {2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}}; }
inline ComplexMatrix sigma3() { return {2, 2, {1.0, 0.0, 0.0, -1.0}}; }

/// (sigma1 + i sigma2) / 2 = |0><1|. With |0> the ground state this lowers;
/// the names follow the matrix definition, not the action.
inline ComplexMatrix sigma_plus() { return {2, 2, {0.0, 1.0, 0.0, 0.0}}; }
/// (sigma1 - i sigma2) / 2 = |1><0|
inline ComplexMatrix sigma_minus() { return {2, 2, {0.0, 0.0, 1.0, 0.0}}; }

inline std::array<ComplexMatrix, 3> sigmas() { return {sigma1(), sigma2(), sigma3()}; }

/// u . sigma for a real 3-vector u.
inline ComplexMatrix along(const std::array<double, 3>& u) {
  return {2, 2, {u[2], Complex(u[0], -u[1]), Complex(u[0], u[1]), -u[2]}};
}

}  // namespace geodiscord::pauli
