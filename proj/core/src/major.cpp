#include "majorlab/major.hpp"

#include <algorithm>
#include <cmath>

namespace majorlab {

namespace {

// Eigenvalues at or below the shared floor (1e-12 times the larger top
// eigenvalue of the pair, so both sides classify identically) count as exact
// zeros. margin_k = log prod_{j<=k} b_j - log prod_{j<=k} a_j, with:
//   - a zero on both sides among the top k: both products vanish, margin 0
//     (this is what makes determinant equality hold for singular pairs);
//   - a zero on one side only: both sides floored at the shared floor, which
//     keeps the margin finite and correctly signed near the classification
//     edge (a genuine rank violation still swings by ~ k log floor).
std::vector<double> prefix_margins(const std::vector<double>& a, const std::vector<double>& b,
                                   double floor, int n) {
  std::vector<double> margins(n);
  bool za = false, zb = false;
  for (int k = 1; k <= n; ++k) {
    za = za || a[k - 1] <= floor;
    zb = zb || b[k - 1] <= floor;
    if (za && zb) {
      margins[k - 1] = 0.0;  // both products vanish
      continue;
    }
    double sum = 0.0;
    if (!za && !zb) {
      for (int j = 0; j < k; ++j) sum += std::log(b[j]) - std::log(a[j]);
    } else {
      for (int j = 0; j < k; ++j)
        sum += std::log(std::max(b[j], floor)) - std::log(std::max(a[j], floor));
    }
    margins[k - 1] = sum;
  }
  return margins;
}

MajorizationReport make_report(Relation rel, std::vector<double> margins, double tol) {
  MajorizationReport rep;
  rep.relation = rel;
  rep.k_margins = std::move(margins);
  rep.tol = tol;
  rep.verdict = true;
  for (double m : rep.k_margins)
    if (m < -tol) rep.verdict = false;
  if (rel == Relation::Log && rep.verdict)
    rep.verdict = std::abs(rep.k_margins.back()) <= tol;
  return rep;
}

double pair_floor(const PsdMatrix& x, const PsdMatrix& y) {
  const double tx = x.eigenvalues().empty() ? 0.0 : x.eigenvalues().front();
  const double ty = y.eigenvalues().empty() ? 0.0 : y.eigenvalues().front();
  return std::max(1e-300, 1e-12 * std::max(tx, ty));
}

}  // namespace

double MajorizationReport::min_margin() const {
  double m = kMarginSentinel;
  for (double v : k_margins) m = std::min(m, v);
  return k_margins.empty() ? 0.0 : m;
}

MajorizationReport weak_log_majorize(const PsdMatrix& x, const PsdMatrix& y, double tol) {
  if (x.dim() != y.dim()) throw DimMismatch("weak_log_majorize: dimension mismatch");
  const double floor = pair_floor(x, y);
  return make_report(Relation::WeakLog,
                     prefix_margins(x.eigenvalues(), y.eigenvalues(), floor, x.dim()), tol);
}

MajorizationReport log_majorize(const PsdMatrix& x, const PsdMatrix& y, double tol) {
  MajorizationReport rep = weak_log_majorize(x, y, tol);
  rep.relation = Relation::Log;
  if (rep.verdict) rep.verdict = std::abs(rep.k_margins.back()) <= tol;
  return rep;
}

MajorizationReport super_weak_log_majorize(const PsdMatrix& x, const PsdMatrix& y, double tol) {
  if (x.dim() != y.dim()) throw DimMismatch("super_weak_log_majorize: dimension mismatch");
  const int n = x.dim();
  const double floor = pair_floor(x, y);
  // nu_j: increasing eigenvalues; the inequality reads prod nu(X) >= prod
  // nu(Y), so the roles swap relative to the weak relation
  std::vector<double> nx(x.eigenvalues().rbegin(), x.eigenvalues().rend());
  std::vector<double> ny(y.eigenvalues().rbegin(), y.eigenvalues().rend());
  std::vector<double> margins = prefix_margins(ny, nx, floor, n);
  return make_report(Relation::SuperWeakLog, std::move(margins), tol);
}

std::vector<double> weak_log_margins_compound(const PsdMatrix& x, const PsdMatrix& y) {
  if (x.dim() != y.dim()) throw DimMismatch("weak_log_margins_compound: dimension mismatch");
  const int n = x.dim();
  std::vector<double> margins(n);
  // A product of the k largest eigenvalues is "zero" once the k-th factor
  // drops below the shared floor, i.e. the ratio of consecutive compound
  // norms falls under it. Zero states latch.
  double floor1 = 0.0;
  double vx_prev = 1.0, vy_prev = 1.0;
  bool zx = false, zy = false;
  for (int k = 1; k <= n; ++k) {
    EigenSystem cx = hermitian_eigen(hermitian_part(compound(x.matrix(), k)));
    EigenSystem cy = hermitian_eigen(hermitian_part(compound(y.matrix(), k)));
    const double vx = std::max(0.0, cx.values.front());
    const double vy = std::max(0.0, cy.values.front());
    if (k == 1) floor1 = 1e-12 * std::max(vx, vy);
    zx = zx || vx <= floor1 * vx_prev;
    zy = zy || vy <= floor1 * vy_prev;
    if (zx != zy)
      margins[k - 1] = zy ? -kMarginSentinel : kMarginSentinel;
    else if (zx)
      margins[k - 1] = 0.0;
    else
      margins[k - 1] = std::log(vy) - std::log(vx);
    vx_prev = vx;
    vy_prev = vy;
  }
  return margins;
}

}  // namespace majorlab
