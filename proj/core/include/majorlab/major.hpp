#ifndef MAJORLAB_MAJOR_HPP
#define MAJORLAB_MAJOR_HPP

#include <vector>

#include "majorlab/matfun.hpp"

namespace majorlab {

enum class Relation { WeakLog, Log, SuperWeakLog };

// Zero products make log margins formally infinite; reports carry this
// sentinel instead so they stay serializable.
inline constexpr double kMarginSentinel = 1e300;

// Per-k verdict for one of the three majorization relations. Margins are in
// log scale: for WeakLog/Log, margin_k = log prod_{j<=k} lambda_j(Y) -
// log prod_{j<=k} lambda_j(X); for SuperWeakLog the products run over the
// increasing eigenvalues nu_j and the roles swap. The relation holds when
// every margin >= -tol (Log additionally needs |margin_n| <= tol).
struct MajorizationReport {
  Relation relation = Relation::WeakLog;
  std::vector<double> k_margins;
  bool verdict = false;
  double tol = 0.0;

  double min_margin() const;
  double margin_n() const { return k_margins.empty() ? 0.0 : k_margins.back(); }
};

MajorizationReport weak_log_majorize(const PsdMatrix& x, const PsdMatrix& y, double tol);
MajorizationReport log_majorize(const PsdMatrix& x, const PsdMatrix& y, double tol);
MajorizationReport super_weak_log_majorize(const PsdMatrix& x, const PsdMatrix& y, double tol);

// Independent route for the weak-log margins through operator norms of
// compound matrices: prod_{j<=k} lambda_j(X) = ||wedge^k X||_inf.
std::vector<double> weak_log_margins_compound(const PsdMatrix& x, const PsdMatrix& y);

}  // namespace majorlab

#endif
