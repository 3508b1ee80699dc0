#ifndef MAJORLAB_LINALG_HPP
#define MAJORLAB_LINALG_HPP

#include <vector>

#include "majorlab/matrix.hpp"

namespace majorlab {

// Eigendecomposition of a Hermitian matrix: H = V diag(values) V*,
// eigenvalues sorted decreasing, V unitary.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Singular value decomposition of a square matrix: M = left diag(singulars) right*,
// singular values sorted decreasing and nonnegative.
struct SvdSystem {
  std::vector<double> singulars;
  ComplexMatrix left;
  ComplexMatrix right;
};

// Cyclic two-sided Jacobi, sweep budget 30*n^2. Input must be Hermitian to
// 1e-12 * max(1, max_abs); throws NotHermitian otherwise, NoConvergence on
// budget exhaustion (does not happen for well-scaled n <= 12 input).
EigenSystem hermitian_eigen(const ComplexMatrix& h);

// SVD through the eigendecomposition of M*M, left factor re-orthonormalized
// and completed on the null space by Gram-Schmidt.
SvdSystem svd(const ComplexMatrix& m);

// Matrix exponential. Hermitian input takes the spectral path; everything
// else scaling-and-squaring with an order-20 Taylor polynomial.
ComplexMatrix expm(const ComplexMatrix& m);
ComplexMatrix expm_general(const ComplexMatrix& m);  // forced scaling/squaring path

// Spectral radius via norm-of-powers (repeated squaring with renormalization);
// Hermitian input short-circuits to max |eigenvalue|.
double spectral_radius(const ComplexMatrix& m);

// Largest singular value.
double operator_norm(const ComplexMatrix& m);

// Determinant by LU with partial pivoting.
Complex determinant(const ComplexMatrix& m);

}  // namespace majorlab

#endif
