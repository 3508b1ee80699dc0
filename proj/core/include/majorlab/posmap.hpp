#ifndef MAJORLAB_POSMAP_HPP
#define MAJORLAB_POSMAP_HPP

#include <vector>

#include "majorlab/matfun.hpp"
#include "majorlab/matrix.hpp"

namespace majorlab {

// Positive linear map in Kraus form: Phi(X) = sum_i Z_i* X Z_i with
// Z_i in M_{m,n} (m = in_dim rows, n = out_dim columns). Positivity is
// structural; the sub-unital / unital flags are computed at construction
// from sum Z_i* Z_i.
class KrausMap {
 public:
  KrausMap(int in_dim, int out_dim, std::vector<ComplexMatrix> kraus);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& kraus_gram() const { return gram_; }  // sum Z_i* Z_i
  bool sub_unital() const { return sub_unital_; }
  bool unital() const { return unital_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;  // DimMismatch if x is not m x m

 private:
  int in_dim_ = 0;
  int out_dim_ = 0;
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix gram_;
  bool sub_unital_ = false;
  bool unital_ = false;
};

// X -> C o X as a Kraus map, built from the rank-one factorization of C.
// Sub-unital exactly when every diagonal entry of C is <= 1 (+ tol).
KrausMap schur_multiplier(const PsdMatrix& c);

// The unital map M_{mn} -> M_n extracting the mean of the m diagonal blocks.
KrausMap block_average(int m, int n);

// The unital map M_{mn} -> M_n averaging over all m^2 blocks with the 1/m
// normalization (the m = 2 case sends [[B,C],[D,E]] to (B+C+D+E)/2).
KrausMap block_full_average(int m, int n);

// Block dilation of a sub-unital map with square Kraus terms:
// a_tilde = A + 0 + ... + 0, b_tilde = B + B + ... + B, z_tilde the mn x mn
// contraction whose first block column stacks the Z_i. The (1,1) block of
// a_tilde z_tilde* b_tilde^p z_tilde a_tilde equals A Phi(B^p) A.
struct Dilation {
  ComplexMatrix a_tilde;
  ComplexMatrix b_tilde;
  ComplexMatrix z_tilde;
};
Dilation dilate(const KrausMap& map, const PsdMatrix& a, const PsdMatrix& b);

// Kraus form of a positive linear map restricted to the commutative algebra
// spanned by A = sum_i lambda_i x_i x_i*: terms Z_{i,j} = x_i r_{i,j} with
// r_{i,j} the j-th row of Phi(E_i)^{1/2}. Reproduces Phi on every power A^t.
struct SpectralImage {
  double eigenvalue;    // lambda_i
  ComplexMatrix image;  // Phi(E_i), PSD, n x n
};
KrausMap kraus_on_commutative(const std::vector<SpectralImage>& data);
KrausMap kraus_on_commutative(const std::vector<SpectralImage>& data,
                              const ComplexMatrix& eigenvectors);

}  // namespace majorlab

#endif
