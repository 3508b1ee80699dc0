#ifndef MAJORLAB_NORMS_HPP
#define MAJORLAB_NORMS_HPP

#include <span>
#include <string>
#include <vector>

#include "majorlab/matfun.hpp"
#include "majorlab/matrix.hpp"

namespace majorlab {

// Closed family of unitarily invariant norms, evaluated as symmetric gauges
// of singular values. The Ky Fan members are extremal for the family, so
// dominance over them settles "all symmetric norms" claims.
struct SymmetricNorm {
  enum class Kind { Operator, Trace, Schatten, KyFan, NormalizedKyFan };

  Kind kind = Kind::Operator;
  double p = 0.0;  // Schatten order, >= 1
  int k = 0;       // Ky Fan order, >= 1

  static SymmetricNorm operator_norm() { return {Kind::Operator, 0.0, 0}; }
  static SymmetricNorm trace_norm() { return {Kind::Trace, 0.0, 0}; }
  static SymmetricNorm schatten(double p);
  static SymmetricNorm kyfan(int k);
  static SymmetricNorm normalized_kyfan(int k);

  // Round-trippable id: "operator", "trace", "schatten:2.0", "kyfan:3", "nkyfan:3".
  std::string id() const;
  static SymmetricNorm parse(const std::string& id);

  // Gauge of a decreasing nonnegative singular-value vector. BadOrder when a
  // Ky Fan order exceeds the vector length.
  double of_singulars(std::span<const double> sigma) const;

  // log || diag(sigma^exponent) || from log singular values (decreasing,
  // -inf marking exact zeros). Stays in log scale so large exponents cannot
  // overflow; exponent must be positive.
  double log_of_powered(std::span<const double> log_sigma, double exponent) const;

  double evaluate(const ComplexMatrix& m) const;  // through SVD, always
};

struct DominanceReport {
  bool holds = false;
  std::vector<double> margins;  // per-k partial-sum slacks, additive scale
};

// Weak (additive) majorization of eigenvalues: sum of k largest of X bounded
// by that of Y plus tol, for every k. The Ky Fan principle.
DominanceReport kyfan_dominance(const PsdMatrix& x, const PsdMatrix& y, double tol);

// || |X*Y| || <= || X*X ||^{1/2} || Y*Y ||^{1/2}; returns the verdict and the
// log-scale slack.
struct CauchySchwarzReport {
  bool holds = false;
  double log_margin = 0.0;
};
CauchySchwarzReport cauchy_schwarz_check(const SymmetricNorm& norm, const ComplexMatrix& x,
                                         const ComplexMatrix& y, double tol);

}  // namespace majorlab

#endif
