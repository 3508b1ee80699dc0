#ifndef MAJORLAB_FUNCTIONAL_HPP
#define MAJORLAB_FUNCTIONAL_HPP

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "majorlab/matfun.hpp"
#include "majorlab/norms.hpp"

namespace majorlab {

// The two-variable norm functional F(p,t) = || |A^{t/p} Z B^{t/p}|^{alpha p} ||
// and its one-variable sections and variants.
enum class Variant {
  TwoVar,     // F(p,t) on (0,inf) x (-inf,inf)
  SectionT1,  // p -> F(p,1)
  SectionP1,  // t -> F(1,t)
  PowerP,     // p -> || |A^{1/p} Z B^{1/p}|^alpha ||^p
  Congruence  // (p,t) -> || (Z* A^{t/p} Z)^{alpha p} ||  (B unused, Z may be rectangular)
};

std::string variant_id(Variant v);
Variant parse_variant(const std::string& id);

struct FunctionalSpec {
  PsdMatrix A;
  PsdMatrix B;
  ComplexMatrix Z;
  double alpha = 1.0;
  SymmetricNorm norm;
  Variant variant = Variant::TwoVar;
};

// log F; may be -inf when the product vanishes. BadDomain for p <= 0 or a
// variant-inconsistent (p,t).
double evaluate_logF(const FunctionalSpec& spec, double p, double t);
double evaluate_F(const FunctionalSpec& spec, double p, double t);

// Rectangular lattice; each axis must be a uniform progression so every
// same-parity index pair has its exact midpoint in-grid (BadGrid otherwise).
struct ProbeGrid {
  std::vector<double> ps;
  std::vector<double> ts;
};
ProbeGrid uniform_grid(double p_lo, double p_hi, int p_count, double t_lo, double t_hi,
                       int t_count);

struct MidpointCheck {
  std::array<int, 2> a;    // (p index, t index)
  std::array<int, 2> b;
  std::array<int, 2> mid;
  double residual;         // log F(mid) - (log F(a) + log F(b)) / 2
};

struct ProbeReport {
  ProbeGrid grid;
  std::vector<double> log_values;  // row-major over (p index, t index)
  std::vector<MidpointCheck> checks;
  double worst_residual = 0.0;
  double min_residual_margin = 0.0;  // -worst_residual
  bool verdict = false;
  double tol = 0.0;

  double log_value(int pi, int ti) const {
    return log_values[static_cast<size_t>(pi) * grid.ts.size() + ti];
  }
};

// Midpoint log-convexity over every index pair whose midpoint lands on the
// grid (covers axis-aligned and diagonal segments alike). The generic engine
// takes any (p,t) -> log F evaluator; the spec overload evaluates the
// functional itself.
ProbeReport midpoint_probe(const std::function<double(double, double)>& log_f,
                           const ProbeGrid& grid, double tol);
ProbeReport probe_logconvexity(const FunctionalSpec& spec, const ProbeGrid& grid, double tol);

// p -> F(p,1) must be nonincreasing when Z is a contraction (log-convex and
// bounded). NotContraction when ||Z||_inf > 1 + 1e-12.
struct MonotoneReport {
  bool verdict = false;
  std::vector<double> step_margins;  // log F(p_i) - log F(p_{i+1})
};
MonotoneReport monotone_section_check(const FunctionalSpec& spec, std::span<const double> p_grid,
                                      double tol);

// lambda_j^{1/p}(A^p Z* B^p Z A^p) along an increasing p sequence, plus a
// Cauchy-tail diagnostic (max |log step| over the last third). Convergence
// is probed, never asserted as a fixed limit.
struct LimitProbe {
  std::vector<double> ps;
  std::vector<double> values;
  double cauchy_tail = 0.0;
};
LimitProbe limit_probe(const PsdMatrix& a, const PsdMatrix& b, const ComplexMatrix& z, int j,
                       std::span<const double> p_sequence);

}  // namespace majorlab

#endif
