#pragma once

#include "geodiscord/core/density_matrix.hpp"
#include "geodiscord/core/matrix.hpp"

#include <cstddef>
#include <vector>

namespace geodiscord {

struct EigenSystem {
  std::vector<double> values;  ///< non-increasing
  ComplexMatrix vectors;       ///< column k belongs to values[k]
};

/// Spectral decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws InvalidStateError when `h` is not Hermitian within
/// `tolerance` (scaled by max(1, max|h_ij|)).
EigenSystem herm_eig(const ComplexMatrix& h, double tolerance = kDefaultTolerance);

/// Eigenvalues only, non-increasing. Same algorithm, no vector accumulation,
/// no Hermiticity check (the Hermitian part of `h` is used).
std::vector<double> herm_eigenvalues(const ComplexMatrix& h);

/// Positive square root of a state. Eigenvalues in [-tolerance, 0) are set
/// to zero; anything more negative throws InvalidStateError.
ComplexMatrix matrix_sqrt_psd(const DensityMatrix& rho);
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& psd, double tolerance = kDefaultTolerance);

/// Schatten 1-norm Tr sqrt(X^dagger X). Hermitian input uses sum |eigenvalues|;
/// otherwise the singular values are read off the Hermitian dilation
/// [[0, X], [X^dagger, 0]], which avoids taking square roots of tiny numbers.
double trace_norm(const ComplexMatrix& x);

enum class Subsystem { A, B };

/// Reduce a state on H_A (x) H_B (A is the leading tensor factor).
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// F(rho, chi) = [Tr (sqrt(rho) chi sqrt(rho))^(1/2)]^2, evaluated as
/// || sqrt(rho) sqrt(chi) ||_1^2. Clamped to [0, 1].
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& chi);

}  // namespace geodiscord
