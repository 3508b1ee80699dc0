#include "majorlab/functional.hpp"

#include <cmath>
#include <limits>

namespace majorlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> log_singulars(const ComplexMatrix& m) {
  SvdSystem sv = svd(m);
  std::vector<double> logs(sv.singulars.size());
  for (size_t j = 0; j < logs.size(); ++j)
    logs[j] = sv.singulars[j] > 0.0 ? std::log(sv.singulars[j]) : kNegInf;
  return logs;
}

std::vector<double> log_psd_eigenvalues(const ComplexMatrix& hermitian) {
  PsdMatrix p = make_psd(hermitian);
  std::vector<double> logs(p.eigenvalues().size());
  for (size_t j = 0; j < logs.size(); ++j)
    logs[j] = p.eigenvalues()[j] > 0.0 ? std::log(p.eigenvalues()[j]) : kNegInf;
  return logs;
}

}  // namespace

std::string variant_id(Variant v) {
  switch (v) {
    case Variant::TwoVar: return "twovar";
    case Variant::SectionT1: return "section_t1";
    case Variant::SectionP1: return "section_p1";
    case Variant::PowerP: return "powerp";
    case Variant::Congruence: return "congruence";
  }
  return "twovar";
}

Variant parse_variant(const std::string& id) {
  if (id == "twovar") return Variant::TwoVar;
  if (id == "section_t1") return Variant::SectionT1;
  if (id == "section_p1") return Variant::SectionP1;
  if (id == "powerp") return Variant::PowerP;
  if (id == "congruence") return Variant::Congruence;
  throw BadDomain("unknown functional variant '" + id + "'");
}

double evaluate_logF(const FunctionalSpec& spec, double p, double t) {
  if (!(p > 0.0) || !std::isfinite(p) || !std::isfinite(t))
    throw BadDomain("evaluate_F: p must be positive and (p,t) finite");
  if (!(spec.alpha > 0.0)) throw BadDomain("evaluate_F: alpha must be positive");

  switch (spec.variant) {
    case Variant::SectionT1:
      if (t != 1.0) throw BadDomain("evaluate_F: SectionT1 fixes t = 1");
      break;
    case Variant::SectionP1:
      if (p != 1.0) throw BadDomain("evaluate_F: SectionP1 fixes p = 1");
      break;
    case Variant::PowerP:
      if (t != 1.0) throw BadDomain("evaluate_F: PowerP fixes t = 1");
      break;
    default:
      break;
  }

  if (spec.variant == Variant::Congruence) {
    const ComplexMatrix inner =
        spec.Z.adjoint() * (psd_power(spec.A, t / p).matrix() * spec.Z);
    return spec.norm.log_of_powered(log_psd_eigenvalues(inner), spec.alpha * p);
  }

  const double exponent = t / p;
  const ComplexMatrix m =
      psd_power(spec.A, exponent).matrix() * spec.Z * psd_power(spec.B, exponent).matrix();
  const std::vector<double> logs = log_singulars(m);

  if (spec.variant == Variant::PowerP)
    return p * spec.norm.log_of_powered(logs, spec.alpha);
  return spec.norm.log_of_powered(logs, spec.alpha * p);
}

double evaluate_F(const FunctionalSpec& spec, double p, double t) {
  return std::exp(evaluate_logF(spec, p, t));
}

ProbeGrid uniform_grid(double p_lo, double p_hi, int p_count, double t_lo, double t_hi,
                       int t_count) {
  ProbeGrid g;
  for (int i = 0; i < p_count; ++i)
    g.ps.push_back(p_count == 1 ? p_lo : p_lo + (p_hi - p_lo) * i / (p_count - 1));
  for (int i = 0; i < t_count; ++i)
    g.ts.push_back(t_count == 1 ? t_lo : t_lo + (t_hi - t_lo) * i / (t_count - 1));
  return g;
}

namespace {

void require_uniform_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw BadGrid(std::string("probe grid axis '") + name + "' is empty");
  if (axis.size() < 3) return;
  const double step = axis[1] - axis[0];
  for (size_t i = 1; i + 1 < axis.size(); ++i) {
    const double s = axis[i + 1] - axis[i];
    if (std::abs(s - step) > 1e-12 * std::max(1.0, std::abs(step)))
      throw BadGrid(std::string("probe grid axis '") + name +
                    "' is not uniform; a midpoint would be missing");
  }
}

}  // namespace

ProbeReport midpoint_probe(const std::function<double(double, double)>& log_f,
                           const ProbeGrid& grid, double tol) {
  require_uniform_axis(grid.ps, "p");
  require_uniform_axis(grid.ts, "t");

  ProbeReport rep;
  rep.grid = grid;
  rep.tol = tol;
  const int np = static_cast<int>(grid.ps.size());
  const int nt = static_cast<int>(grid.ts.size());
  rep.log_values.resize(static_cast<size_t>(np) * nt);
  for (int pi = 0; pi < np; ++pi)
    for (int ti = 0; ti < nt; ++ti)
      rep.log_values[static_cast<size_t>(pi) * nt + ti] = log_f(grid.ps[pi], grid.ts[ti]);

  rep.worst_residual = kNegInf;
  // every ordered pair of distinct nodes with both index sums even
  for (int a = 0; a < np * nt; ++a) {
    for (int b = a + 1; b < np * nt; ++b) {
      const int api = a / nt, ati = a % nt;
      const int bpi = b / nt, bti = b % nt;
      if ((api + bpi) % 2 != 0 || (ati + bti) % 2 != 0) continue;
      MidpointCheck chk;
      chk.a = {api, ati};
      chk.b = {bpi, bti};
      chk.mid = {(api + bpi) / 2, (ati + bti) / 2};
      const double fa = rep.log_values[static_cast<size_t>(api) * nt + ati];
      const double fb = rep.log_values[static_cast<size_t>(bpi) * nt + bti];
      const double fm = rep.log_values[static_cast<size_t>(chk.mid[0]) * nt + chk.mid[1]];
      if (fm == kNegInf)
        chk.residual = kNegInf;  // zero at the midpoint satisfies log-convexity trivially
      else if (fa == kNegInf || fb == kNegInf)
        chk.residual = std::numeric_limits<double>::infinity();  // genuine violation
      else
        chk.residual = fm - 0.5 * (fa + fb);
      rep.checks.push_back(chk);
      if (chk.residual > rep.worst_residual) rep.worst_residual = chk.residual;
    }
  }
  if (rep.checks.empty()) rep.worst_residual = 0.0;
  rep.min_residual_margin = -rep.worst_residual;
  rep.verdict = rep.worst_residual <= tol;
  return rep;
}

ProbeReport probe_logconvexity(const FunctionalSpec& spec, const ProbeGrid& grid, double tol) {
  switch (spec.variant) {
    case Variant::SectionT1:
    case Variant::PowerP:
      for (double t : grid.ts)
        if (t != 1.0) throw BadGrid("probe grid: this variant fixes t = 1");
      break;
    case Variant::SectionP1:
      for (double p : grid.ps)
        if (p != 1.0) throw BadGrid("probe grid: SectionP1 fixes p = 1");
      break;
    default:
      break;
  }
  for (double p : grid.ps)
    if (!(p > 0.0)) throw BadGrid("probe grid: p values must be positive");
  return midpoint_probe(
      [&spec](double p, double t) { return evaluate_logF(spec, p, t); }, grid, tol);
}

MonotoneReport monotone_section_check(const FunctionalSpec& spec, std::span<const double> p_grid,
                                      double tol) {
  if (operator_norm(spec.Z) > 1.0 + 1e-12)
    throw NotContraction("monotone_section_check: Z is not a contraction");
  MonotoneReport rep;
  rep.verdict = true;
  FunctionalSpec section = spec;
  section.variant = Variant::TwoVar;  // evaluate F(p, 1) directly
  double prev = 0.0;
  for (size_t i = 0; i < p_grid.size(); ++i) {
    const double cur = evaluate_logF(section, p_grid[i], 1.0);
    if (i > 0) {
      const double margin = prev - cur;  // nonincreasing: prev >= cur
      rep.step_margins.push_back(margin);
      if (margin < -tol) rep.verdict = false;
    }
    prev = cur;
  }
  return rep;
}

namespace {

// Normalized k-th compound of the sandwich factors, with the top-value logs
// split off. lambda_j(M_p) spans an enormous dynamic range at large p; the
// quotient of top compound eigenvalues recovers it entirely in log scale.
struct CompoundFactors {
  PsdMatrix a_hat = PsdMatrix(ComplexMatrix::identity(1));  // top eigenvalue 1
  PsdMatrix b_hat = PsdMatrix(ComplexMatrix::identity(1));
  ComplexMatrix z_hat;  // top singular value 1
  double log_a = 0.0;
  double log_b = 0.0;
  double log_z = 0.0;
  bool degenerate = false;  // some factor vanishes at this order
};

CompoundFactors compound_factors(const PsdMatrix& a, const PsdMatrix& b, const ComplexMatrix& z,
                                 int k) {
  CompoundFactors f;
  const PsdMatrix ca = make_psd(compound(a.matrix(), k));
  const PsdMatrix cb = make_psd(compound(b.matrix(), k));
  const ComplexMatrix cz = compound(z, k);
  const double ta = ca.eigenvalues().front();
  const double tb = cb.eigenvalues().front();
  const double tz = operator_norm(cz);
  if (ta <= 0.0 || tb <= 0.0 || tz <= 0.0) {
    f.degenerate = true;
    return f;
  }
  std::vector<double> va = ca.eigenvalues(), vb = cb.eigenvalues();
  for (double& v : va) v /= ta;
  for (double& v : vb) v /= tb;
  f.a_hat = PsdMatrix::from_spectrum(std::move(va), ca.spectrum().vectors);
  f.b_hat = PsdMatrix::from_spectrum(std::move(vb), cb.spectrum().vectors);
  f.z_hat = (1.0 / tz) * cz;
  f.log_a = std::log(ta);
  f.log_b = std::log(tb);
  f.log_z = std::log(tz);
  return f;
}

// log lambda_1((wedge^k A)^p wedge^k Z* (wedge^k B)^p wedge^k Z (wedge^k A)^p)
double log_top_sandwich(const CompoundFactors& f, double p) {
  if (f.degenerate) return -std::numeric_limits<double>::infinity();
  const ComplexMatrix ap = psd_power(f.a_hat, p).matrix();
  const ComplexMatrix bp = psd_power(f.b_hat, p).matrix();
  const ComplexMatrix m = ap * (f.z_hat.adjoint() * (bp * (f.z_hat * ap)));
  const EigenSystem es = hermitian_eigen(hermitian_part(m));
  const double top = es.values.front();
  if (top <= 0.0) return -std::numeric_limits<double>::infinity();
  return 2.0 * p * f.log_a + p * f.log_b + 2.0 * f.log_z + std::log(top);
}

}  // namespace

LimitProbe limit_probe(const PsdMatrix& a, const PsdMatrix& b, const ComplexMatrix& z, int j,
                       std::span<const double> p_sequence) {
  if (j < 1 || j > a.dim()) throw BadOrder("limit_probe: eigenvalue index out of range");
  LimitProbe probe;
  const CompoundFactors upper = compound_factors(a, b, z, j);
  const CompoundFactors lower =
      j > 1 ? compound_factors(a, b, z, j - 1) : CompoundFactors{};

  for (double p : p_sequence) {
    const double top = log_top_sandwich(upper, p);
    const double below = j > 1 ? log_top_sandwich(lower, p) : 0.0;
    probe.ps.push_back(p);
    probe.values.push_back(std::isinf(top) || std::isinf(below)
                               ? 0.0
                               : std::exp((top - below) / p));
  }

  // max successive |log| step over the last third of the ladder
  const size_t n = probe.values.size();
  double tail = 0.0;
  if (n >= 2) {
    const size_t first_diff = 2 * (n - 1) / 3;
    for (size_t i = first_diff; i + 1 < n; ++i) {
      const double x = probe.values[i], y = probe.values[i + 1];
      if (x > 0.0 && y > 0.0)
        tail = std::max(tail, std::abs(std::log(y) - std::log(x)));
      else if (x != y)
        tail = std::max(tail, 1.0);
    }
  }
  probe.cauchy_tail = tail;
  return probe;
}

}  // namespace majorlab
