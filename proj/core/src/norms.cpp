#include "majorlab/norms.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace majorlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(sum exp(v_j)) over a list that may contain -inf entries.
double log_sum_exp(std::span<const double> v) {
  double top = kNegInf;
  for (double x : v) top = std::max(top, x);
  if (top == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : v)
    if (x != kNegInf) s += std::exp(x - top);
  return top + std::log(s);
}

std::string format_order(double p) {
  char buf[32];
  if (p == std::floor(p) && std::abs(p) < 1e6)
    std::snprintf(buf, sizeof buf, "%.1f", p);
  else
    std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

}  // namespace

SymmetricNorm SymmetricNorm::schatten(double p) {
  if (!(p >= 1.0)) throw BadDomain("SymmetricNorm: Schatten order must be >= 1");
  return {Kind::Schatten, p, 0};
}

SymmetricNorm SymmetricNorm::kyfan(int k) {
  if (k < 1) throw BadOrder("SymmetricNorm: Ky Fan order must be >= 1");
  return {Kind::KyFan, 0.0, k};
}

SymmetricNorm SymmetricNorm::normalized_kyfan(int k) {
  if (k < 1) throw BadOrder("SymmetricNorm: Ky Fan order must be >= 1");
  return {Kind::NormalizedKyFan, 0.0, k};
}

std::string SymmetricNorm::id() const {
  switch (kind) {
    case Kind::Operator: return "operator";
    case Kind::Trace: return "trace";
    case Kind::Schatten: return "schatten:" + format_order(p);
    case Kind::KyFan: return "kyfan:" + std::to_string(k);
    case Kind::NormalizedKyFan: return "nkyfan:" + std::to_string(k);
  }
  return "operator";
}

SymmetricNorm SymmetricNorm::parse(const std::string& id) {
  if (id == "operator") return operator_norm();
  if (id == "trace") return trace_norm();
  const auto colon = id.find(':');
  if (colon != std::string::npos) {
    const std::string head = id.substr(0, colon);
    const std::string tail = id.substr(colon + 1);
    if (head == "schatten") return schatten(std::stod(tail));
    if (head == "kyfan") return kyfan(std::stoi(tail));
    if (head == "nkyfan") return normalized_kyfan(std::stoi(tail));
  }
  throw BadDomain("SymmetricNorm: cannot parse id '" + id + "'");
}

double SymmetricNorm::of_singulars(std::span<const double> sigma) const {
  const int n = static_cast<int>(sigma.size());
  switch (kind) {
    case Kind::Operator:
      return n > 0 ? sigma[0] : 0.0;
    case Kind::Trace: {
      double s = 0.0;
      for (double v : sigma) s += v;
      return s;
    }
    case Kind::Schatten: {
      // factor out the top value to stay overflow-safe for large p
      if (n == 0 || sigma[0] == 0.0) return 0.0;
      double s = 0.0;
      for (double v : sigma) s += std::pow(v / sigma[0], p);
      return sigma[0] * std::pow(s, 1.0 / p);
    }
    case Kind::KyFan:
    case Kind::NormalizedKyFan: {
      if (k > n) throw BadOrder("SymmetricNorm: Ky Fan order exceeds dimension");
      double s = 0.0;
      for (int j = 0; j < k; ++j) s += sigma[j];
      return kind == Kind::KyFan ? s : s / k;
    }
  }
  return 0.0;
}

double SymmetricNorm::log_of_powered(std::span<const double> log_sigma, double exponent) const {
  if (!(exponent > 0.0)) throw BadDomain("SymmetricNorm: exponent must be positive");
  const int n = static_cast<int>(log_sigma.size());
  std::vector<double> scaled(n);
  for (int j = 0; j < n; ++j)
    scaled[j] = log_sigma[j] == kNegInf ? kNegInf : exponent * log_sigma[j];
  switch (kind) {
    case Kind::Operator:
      return n > 0 ? scaled[0] : kNegInf;
    case Kind::Trace:
      return log_sum_exp(scaled);
    case Kind::Schatten: {
      std::vector<double> ps(n);
      for (int j = 0; j < n; ++j) ps[j] = scaled[j] == kNegInf ? kNegInf : p * scaled[j];
      const double lse = log_sum_exp(ps);
      return lse == kNegInf ? kNegInf : lse / p;
    }
    case Kind::KyFan:
    case Kind::NormalizedKyFan: {
      if (k > n) throw BadOrder("SymmetricNorm: Ky Fan order exceeds dimension");
      const double lse = log_sum_exp(std::span<const double>(scaled.data(), k));
      if (lse == kNegInf) return kNegInf;
      return kind == Kind::KyFan ? lse : lse - std::log(static_cast<double>(k));
    }
  }
  return kNegInf;
}

double SymmetricNorm::evaluate(const ComplexMatrix& m) const {
  SvdSystem sv = svd(m);
  return of_singulars(sv.singulars);
}

DominanceReport kyfan_dominance(const PsdMatrix& x, const PsdMatrix& y, double tol) {
  if (x.dim() != y.dim()) throw DimMismatch("kyfan_dominance: dimension mismatch");
  DominanceReport rep;
  rep.holds = true;
  double sx = 0.0, sy = 0.0;
  for (int k = 0; k < x.dim(); ++k) {
    sx += x.eigenvalues()[k];
    sy += y.eigenvalues()[k];
    rep.margins.push_back(sy - sx);
    if (sx > sy + tol) rep.holds = false;
  }
  return rep;
}

CauchySchwarzReport cauchy_schwarz_check(const SymmetricNorm& norm, const ComplexMatrix& x,
                                         const ComplexMatrix& y, double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DimMismatch("cauchy_schwarz_check: shape mismatch");
  const double lhs = norm.evaluate(abs_val(x.adjoint() * y).matrix());
  const double rx = norm.evaluate(hermitian_part(x.adjoint() * x));
  const double ry = norm.evaluate(hermitian_part(y.adjoint() * y));
  const double rhs = std::sqrt(rx) * std::sqrt(ry);
  CauchySchwarzReport rep;
  if (lhs == 0.0) {
    rep.holds = true;
    rep.log_margin = rhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.log_margin = std::log(rhs) - std::log(lhs);
  rep.holds = rep.log_margin >= -tol;
  return rep;
}

}  // namespace majorlab
