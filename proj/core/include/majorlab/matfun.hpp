#ifndef MAJORLAB_MATFUN_HPP
#define MAJORLAB_MATFUN_HPP

#include <utility>
#include <vector>

#include "majorlab/linalg.hpp"
#include "majorlab/matrix.hpp"

namespace majorlab {

// Positive semidefinite matrix with its cached spectral decomposition.
// Eigenvalues below 1e-10 * max(1, lambda_1) are clamped to exact zero at
// construction; anything below -1e-10 * max(1, lambda_1) is rejected.
class PsdMatrix {
 public:
  explicit PsdMatrix(const ComplexMatrix& h);  // NotHermitian / NotPsd

  // Clamp every negative eigenvalue to zero instead of rejecting; used by the
  // search re-projection step.
  static PsdMatrix project(const ComplexMatrix& h);

  // Trusted constructor from known nonnegative spectral data (re-sorted).
  static PsdMatrix from_spectrum(std::vector<double> values, ComplexMatrix vectors);

  const ComplexMatrix& matrix() const { return matrix_; }
  const EigenSystem& spectrum() const { return spectrum_; }
  const std::vector<double>& eigenvalues() const { return spectrum_.values; }
  ComplexMatrix sorted_diagonal() const;  // diag of eigenvalues, decreasing
  int dim() const { return matrix_.rows(); }
  int rank() const;  // eigenvalues > 0 after clamping

 private:
  PsdMatrix() = default;
  ComplexMatrix matrix_;
  EigenSystem spectrum_;
};

// Hermitize a product that is PSD in exact arithmetic and wrap it.
PsdMatrix make_psd(const ComplexMatrix& m);

// Normal matrix with its polar data: N = phase * |N|, phase unitary and
// commuting with |N|.
class NormalMatrix {
 public:
  explicit NormalMatrix(const ComplexMatrix& n);  // NotNormal

  const ComplexMatrix& matrix() const { return matrix_; }
  const PsdMatrix& abs() const { return abs_; }
  const ComplexMatrix& phase() const { return phase_; }
  int dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
  PsdMatrix abs_;
  ComplexMatrix phase_;
};

// A^t under the generalized-inverse convention: zero eigenvalues map to zero
// for every t (so t = 0 yields the range projection and negative powers act
// on the range only). Total on PsdMatrix x finite reals.
PsdMatrix psd_power(const PsdMatrix& a, double t);

// |M| = (M*M)^{1/2} via SVD; eigenvalues are the singular values of M.
PsdMatrix abs_val(const ComplexMatrix& m);

// Polar decomposition M = U |M| with U unitary (completed on the null space).
std::pair<ComplexMatrix, PsdMatrix> polar(const ComplexMatrix& m);

// Cartesian decomposition T = X + iY with X, Y Hermitian.
std::pair<ComplexMatrix, ComplexMatrix> cartesian(const ComplexMatrix& t);

// Entrywise (Schur) product.
ComplexMatrix schur_product(const ComplexMatrix& x, const ComplexMatrix& y);

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);
ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

// k-th compound (antisymmetric power): C(n,k)-dimensional matrix of k x k
// minors, index sets in lexicographic order. BadOrder unless 1 <= k <= n.
ComplexMatrix compound(const ComplexMatrix& m, int k);

// Lexicographic k-subsets of {0, ..., n-1}; the index convention compound() uses.
std::vector<std::vector<int>> k_subsets(int n, int k);

// Integer matrix power by repeated squaring (p >= 0).
ComplexMatrix matrix_power(const ComplexMatrix& m, int p);

}  // namespace majorlab

#endif
