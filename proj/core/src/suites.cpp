#include "majorlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace majorlab {

// ---------------------------------------------------------------------------
// generators

namespace {

ComplexMatrix gaussian_matrix(RandomStream& rs, int rows, int cols) {
  ComplexMatrix g(rows, cols);
  const double scale = 1.0 / std::sqrt(2.0 * std::max(rows, cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = scale * rs.complex_gaussian();
  return g;
}

void orthonormalize_columns(ComplexMatrix& q) {
  const int n = q.rows();
  for (int j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex proj{0.0, 0.0};
        for (int i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) q(i, j) /= norm;
  }
}

}  // namespace

ComplexMatrix gen_unitary(RandomStream& rs, int n) {
  ComplexMatrix q = gaussian_matrix(rs, n, n);
  orthonormalize_columns(q);
  return q;
}

PsdMatrix gen_psd(RandomStream& rs, int n, SpectrumProfile profile, double power_budget) {
  ComplexMatrix q = gen_unitary(rs, n);
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = rs.uniform(0.5, 2.0);
  switch (profile) {
    case SpectrumProfile::WellConditioned:
      break;
    case SpectrumProfile::NearSingular: {
      // depth keyed to the largest power the instance will raise this matrix
      // to, so log margins downstream stay numerically meaningful
      const double deep = std::pow(10.0, -3.0 / std::max(1.0, power_budget));
      values[n - 1] = deep * rs.uniform(0.5, 1.0);
      break;
    }
    case SpectrumProfile::RankDeficient: {
      const int zeros = 1 + (n >= 4 ? rs.uniform_int(0, 1) : 0);
      for (int i = 0; i < zeros; ++i) values[n - 1 - i] = 0.0;
      break;
    }
  }
  std::sort(values.begin(), values.end(), std::greater<double>());
  return PsdMatrix::from_spectrum(std::move(values), std::move(q));
}

ComplexMatrix gen_normal(RandomStream& rs, int n) {
  ComplexMatrix q = gen_unitary(rs, n);
  std::vector<Complex> mu(n);
  for (int i = 0; i < n; ++i) {
    const double r = rs.uniform(0.3, 1.5);
    const double phi = rs.uniform(0.0, 2.0 * M_PI);
    mu[i] = Complex{r * std::cos(phi), r * std::sin(phi)};
  }
  return q * ComplexMatrix::diagonal(mu) * q.adjoint();
}

ComplexMatrix gen_contraction(RandomStream& rs, int n) {
  ComplexMatrix z = gaussian_matrix(rs, n, n);
  const double top = operator_norm(z);
  const bool strict = rs.uniform() < 0.5;
  const double target = strict ? rs.uniform(0.3, 0.95) : 1.0;
  if (top > 0.0) z *= target / top;
  return z;
}

ComplexMatrix gen_expansive(RandomStream& rs, int n) {
  SvdSystem sv = svd(gaussian_matrix(rs, n, n));
  const double extra = rs.uniform() < 0.5 ? rs.uniform(0.0, 0.5) : 0.0;
  std::vector<Complex> shifted(n);
  for (int j = 0; j < n; ++j) shifted[j] = sv.singulars[j] + 1.0 + extra;
  return sv.left * ComplexMatrix::diagonal(shifted) * sv.right.adjoint();
}

ComplexMatrix gen_hermitian(RandomStream& rs, int n) {
  ComplexMatrix h = hermitian_part(gaussian_matrix(rs, n, n));
  EigenSystem es = hermitian_eigen(h);
  double top = 0.0;
  for (double v : es.values) top = std::max(top, std::abs(v));
  if (top > 0.0) h *= rs.uniform(0.4, 1.0) / top;
  return h;
}

ComplexMatrix gen_general(RandomStream& rs, int n) { return gaussian_matrix(rs, n, n); }

KrausMap gen_subunital_map(RandomStream& rs, int m, int n, int k_terms) {
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < k_terms; ++i) kraus.push_back(gaussian_matrix(rs, m, n));
  ComplexMatrix gram(n, n);
  for (const auto& z : kraus) gram += z.adjoint() * z;
  EigenSystem es = hermitian_eigen(hermitian_part(gram));
  const double top = es.values.front();
  const bool strict = rs.uniform() < 0.5;
  const double target = strict ? rs.uniform(0.4, 0.95) : 1.0;
  const double f = std::sqrt(target / top);
  for (auto& z : kraus) z *= f;
  return KrausMap(m, n, std::move(kraus));
}

PsdMatrix gen_psd(uint64_t seed, int n, SpectrumProfile profile) {
  RandomStream rs(seed);
  return gen_psd(rs, n, profile);
}
ComplexMatrix gen_contraction(uint64_t seed, int n) {
  RandomStream rs(seed);
  return gen_contraction(rs, n);
}
ComplexMatrix gen_normal(uint64_t seed, int n) {
  RandomStream rs(seed);
  return gen_normal(rs, n);
}
ComplexMatrix gen_expansive(uint64_t seed, int n) {
  RandomStream rs(seed);
  return gen_expansive(rs, n);
}
ComplexMatrix gen_hermitian(uint64_t seed, int n) {
  RandomStream rs(seed);
  return gen_hermitian(rs, n);
}
KrausMap gen_subunital_map(uint64_t seed, int m, int n, int k_terms) {
  RandomStream rs(seed);
  return gen_subunital_map(rs, m, n, k_terms);
}

// ---------------------------------------------------------------------------
// instance plumbing

std::string part_kind_id(PartKind k) {
  switch (k) {
    case PartKind::Psd: return "psd";
    case PartKind::Hermitian: return "hermitian";
    case PartKind::Normal: return "normal";
    case PartKind::Contraction: return "contraction";
    case PartKind::Expansive: return "expansive";
    case PartKind::General: return "general";
    case PartKind::SchurMask: return "schur_mask";
    case PartKind::Unitary: return "unitary";
  }
  return "general";
}

PartKind parse_part_kind(const std::string& id) {
  if (id == "psd") return PartKind::Psd;
  if (id == "hermitian") return PartKind::Hermitian;
  if (id == "normal") return PartKind::Normal;
  if (id == "contraction") return PartKind::Contraction;
  if (id == "expansive") return PartKind::Expansive;
  if (id == "general") return PartKind::General;
  if (id == "schur_mask") return PartKind::SchurMask;
  if (id == "unitary") return PartKind::Unitary;
  throw BadDomain("unknown part kind '" + id + "'");
}

const Part& Instance::part(const std::string& name) const {
  auto it = parts.find(name);
  if (it == parts.end())
    throw SignatureMismatch("instance for '" + gen_id + "' lacks part '" + name + "'");
  return it->second;
}

double Instance::scalar(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end())
    throw SignatureMismatch("instance for '" + gen_id + "' lacks scalar '" + name + "'");
  return it->second;
}

bool outcome_passed(const CheckOutcome& o) {
  return o.expects_violation ? true : o.verdict;
}

// ---------------------------------------------------------------------------
// trace-function catalog

const std::vector<TraceFunction>& econvex_catalog() {
  static const std::vector<TraceFunction> cat = {
      {"t", [](double t) { return t; }},
      {"t^2", [](double t) { return t * t; }},
      {"sqrt_t", [](double t) { return std::sqrt(t); }},
      {"log1p_t", [](double t) { return std::log1p(t); }},
      {"log1p_t2", [](double t) { return std::log1p(t * t); }},
      {"exp_t", [](double t) { return std::exp(t); }},
  };
  return cat;
}

const std::vector<TraceFunction>& econcave_catalog() {
  static const std::vector<TraceFunction> cat = {
      {"log_t_over_1pt", [](double t) { return std::log(t) - std::log1p(t); }},
      {"log_t2_over_1pt", [](double t) { return 2.0 * std::log(t) - std::log1p(t); }},
      {"log_t", [](double t) { return std::log(t); }},
  };
  return cat;
}

namespace {

bool certify_midpoint(const std::function<double(double)>& f, int points, double lo, double hi,
                      double tol, bool convex) {
  for (int i = 0; i + 2 < points; ++i) {
    const double s0 = lo + (hi - lo) * i / (points - 1);
    const double s1 = lo + (hi - lo) * (i + 1) / (points - 1);
    const double s2 = lo + (hi - lo) * (i + 2) / (points - 1);
    const double h0 = f(std::exp(s0));
    const double h1 = f(std::exp(s1));
    const double h2 = f(std::exp(s2));
    const double gap = h1 - 0.5 * (h0 + h2);  // <= 0 for convex
    if (convex && gap > tol) return false;
    if (!convex && gap < -tol) return false;
  }
  return true;
}

}  // namespace

bool certify_econvex(const std::function<double(double)>& f, int points, double lo, double hi,
                     double tol) {
  return certify_midpoint(f, points, lo, hi, tol, true);
}

bool certify_econcave(const std::function<double(double)>& f, int points, double lo, double hi,
                      double tol) {
  return certify_midpoint(f, points, lo, hi, tol, false);
}

// ---------------------------------------------------------------------------
// registry

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"araki", "araki-family", false, true},
      {"lieb_thirring", "araki-family", false, false},
      {"cor1_norm", "araki-family", false, false},
      {"striking", "araki-family", false, false},
      {"super_expansive", "araki-family", false, false},
      {"trace_econvex", "araki-family", false, false},
      {"trace_econcave", "araki-family", false, false},
      {"triangle_normal", "normal-family", false, false},
      {"araki_normal", "normal-family", false, true},
      {"main_normal_map", "normal-family", false, false},
      {"m_normals", "normal-family", false, false},
      {"cartesian", "normal-family", false, false},
      {"sym_part", "normal-family", false, false},
      {"cohen_exp", "exp-family", false, true},
      {"thompson_exp", "exp-family", false, true},
      {"gt_log", "exp-family", false, true},
      {"segal", "exp-family", false, false},
      {"golden_thompson", "exp-family", false, false},
      {"emi", "exp-family", false, false},
      {"lie_trotter_probe", "exp-family", false, false},
      {"subunital_psd", "posmap-family", false, false},
      {"schur_mask", "schur-family", false, false},
      {"schur_normals", "schur-family", false, false},
      {"schur_TT", "schur-family", false, false},
      {"schur_exponent_exchange", "schur-family", false, false},
      {"det_schur_counterexample", "schur-family", true, false},
      {"loewner_heinz", "holder-family", false, false},
      {"kosaki_holder", "holder-family", false, false},
      {"littlewood_scalar", "holder-family", false, false},
      {"littlewood_matrix", "holder-family", false, false},
      {"poslin_probe", "holder-family", false, false},
  };
  return defs;
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  return ids;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  throw UnknownCheck("unknown check id '" + id + "'");
}

std::vector<std::string> suite_ids() {
  return {"araki-family", "normal-family", "exp-family",
          "schur-family", "holder-family", "posmap-family", "all"};
}

std::vector<std::string> suite_checks(const std::string& suite_id) {
  std::vector<std::string> out;
  for (const auto& d : registry())
    if (suite_id == "all" || d.family == suite_id) out.push_back(d.id);
  if (out.empty()) throw UnknownSuite("unknown suite id '" + suite_id + "'");
  return out;
}

// ---------------------------------------------------------------------------
// instance generation

namespace {

struct Draw {
  RandomStream rs;
  const SweepParams& params;

  int pick_n() { return params.dims[rs.uniform_int(0, static_cast<int>(params.dims.size()) - 1)]; }
  double pick_p() {
    return params.pvals[rs.uniform_int(0, static_cast<int>(params.pvals.size()) - 1)];
  }
  double pick_alpha() {
    return params.alphas[rs.uniform_int(0, static_cast<int>(params.alphas.size()) - 1)];
  }
  SymmetricNorm pick_norm(int n) {
    switch (rs.uniform_int(0, 4)) {
      case 0: return SymmetricNorm::operator_norm();
      case 1: return SymmetricNorm::trace_norm();
      case 2: {
        const double ps[3] = {1.5, 2.0, 3.0};
        return SymmetricNorm::schatten(ps[rs.uniform_int(0, 2)]);
      }
      case 3: return SymmetricNorm::kyfan(rs.uniform_int(1, n));
      default: return SymmetricNorm::normalized_kyfan(rs.uniform_int(1, n));
    }
  }

  // Profile rotation for PSD parts. Near-singular spectra are confined to
  // p = 1 trials, where both sides of a sandwich identity coincide exactly
  // and log margins stay conditioned; rank-deficient zeros are exact and
  // safe at any power.
  SpectrumProfile pick_profile(bool det_equality, double p, Instance& inst) {
    const int u = rs.uniform_int(0, 5);
    if (u == 4) return SpectrumProfile::RankDeficient;
    if (u == 5 && !det_equality && p == 1.0) {
      inst.scalars["tol_hint"] = 1e-8;
      return SpectrumProfile::NearSingular;
    }
    return SpectrumProfile::WellConditioned;
  }

  void add_psd(Instance& inst, const std::string& name, int n, SpectrumProfile prof,
               double budget = 1.0) {
    inst.parts[name] = {gen_psd(rs, n, prof, budget).matrix(), PartKind::Psd};
  }
};

ComplexMatrix schur_mask_matrix(RandomStream& rs, int n) {
  PsdMatrix c = gen_psd(rs, n, SpectrumProfile::WellConditioned);
  ComplexMatrix m = c.matrix();
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = std::sqrt(m(i, i).real());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) /= d[i] * d[j];  // correlation form, diag exactly 1
  if (rs.uniform() < 0.5) m *= rs.uniform(0.3, 1.0);
  for (int i = 0; i < n; ++i) m(i, i) = Complex{std::min(m(i, i).real(), 1.0), 0.0};
  return m;
}

}  // namespace

Instance gen_instance(const std::string& check_id, uint64_t seed, uint64_t trial,
                      const SweepParams& params) {
  const CheckDef& def = find_check(check_id);
  RandomStream base = RandomStream(seed).substream(check_id).substream(trial);
  const uint64_t inst_seed = RandomStream::mix(seed ^ RandomStream::mix(trial));

  Instance inst;
  inst.seed = inst_seed;
  inst.gen_id = check_id;
  Draw d{base, params};
  const int n = d.pick_n();
  inst.n = n;
  inst.m = n;

  auto sandwich_parts = [&](bool with_z, PartKind zkind) {
    const double p = d.pick_p();
    inst.scalars["p"] = p;
    const SpectrumProfile pa = d.pick_profile(def.det_equality, p, inst);
    const SpectrumProfile pb = d.pick_profile(def.det_equality, p, inst);
    d.add_psd(inst, "A", n, pa, 2.0 * p);
    d.add_psd(inst, "B", n, pb, p);
    if (with_z)
      inst.parts["Z"] = {zkind == PartKind::Contraction ? gen_contraction(d.rs, n)
                                                        : gen_expansive(d.rs, n),
                         zkind};
  };

  if (check_id == "araki") {
    sandwich_parts(false, PartKind::General);
  } else if (check_id == "lieb_thirring") {
    inst.scalars["p"] = static_cast<double>(d.rs.uniform_int(1, 3));
    d.add_psd(inst, "A", n, d.pick_profile(false, 2.0, inst));
    d.add_psd(inst, "B", n, d.pick_profile(false, 2.0, inst));
  } else if (check_id == "cor1_norm") {
    sandwich_parts(true, PartKind::Contraction);
    inst.scalars["alpha"] = d.pick_alpha();
    inst.norm = d.pick_norm(n);
  } else if (check_id == "striking" || check_id == "trace_econvex") {
    sandwich_parts(true, PartKind::Contraction);
    if (check_id == "trace_econvex")
      inst.scalars["f_id"] =
          static_cast<double>(d.rs.uniform_int(0, static_cast<int>(econvex_catalog().size()) - 1));
  } else if (check_id == "super_expansive" || check_id == "trace_econcave") {
    const double p = d.pick_p();
    inst.scalars["p"] = p;
    const bool well_only = check_id == "trace_econcave";
    d.add_psd(inst, "A", n,
              well_only ? SpectrumProfile::WellConditioned : d.pick_profile(true, p, inst), 2.0 * p);
    d.add_psd(inst, "B", n,
              well_only ? SpectrumProfile::WellConditioned : d.pick_profile(true, p, inst), p);
    inst.parts["Z"] = {gen_expansive(d.rs, n), PartKind::Expansive};
    if (check_id == "trace_econcave")
      inst.scalars["f_id"] =
          static_cast<double>(d.rs.uniform_int(0, static_cast<int>(econcave_catalog().size()) - 1));
  } else if (check_id == "triangle_normal") {
    inst.parts["X"] = {gen_normal(d.rs, n), PartKind::Normal};
    inst.parts["Y"] = {gen_normal(d.rs, n), PartKind::Normal};
  } else if (check_id == "araki_normal") {
    inst.scalars["p"] = d.pick_p();
    d.add_psd(inst, "A", n, d.pick_profile(true, inst.scalar("p"), inst), 2.0 * inst.scalar("p"));
    inst.parts["X"] = {gen_normal(d.rs, n), PartKind::Normal};
  } else if (check_id == "main_normal_map") {
    const int m = n + d.rs.uniform_int(0, 1);
    inst.m = m;
    inst.scalars["p"] = d.pick_p();
    d.add_psd(inst, "A", n, d.pick_profile(false, inst.scalar("p"), inst), 2.0 * inst.scalar("p"));
    inst.parts["N"] = {gen_normal(d.rs, m), PartKind::Normal};
    inst.map = gen_subunital_map(d.rs, m, n, d.rs.uniform_int(2, 3));
  } else if (check_id == "m_normals") {
    const int m_count = d.rs.uniform_int(2, 4);
    inst.scalars["p"] = d.pick_p();
    inst.scalars["m_count"] = static_cast<double>(m_count);
    d.add_psd(inst, "A", n, d.pick_profile(false, inst.scalar("p"), inst), 2.0 * inst.scalar("p"));
    for (int k = 0; k < m_count; ++k)
      inst.parts["X" + std::to_string(k)] = {gen_normal(d.rs, n), PartKind::Normal};
  } else if (check_id == "cartesian" || check_id == "sym_part" || check_id == "schur_TT") {
    inst.scalars["p"] = d.pick_p();
    d.add_psd(inst, "A", n, d.pick_profile(false, inst.scalar("p"), inst), 2.0 * inst.scalar("p"));
    inst.parts["T"] = {gen_general(d.rs, n), PartKind::General};
  } else if (check_id == "schur_normals") {
    inst.scalars["p"] = d.pick_p();
    d.add_psd(inst, "A", n, d.pick_profile(false, inst.scalar("p"), inst), 2.0 * inst.scalar("p"));
    inst.parts["X"] = {gen_normal(d.rs, n), PartKind::Normal};
    inst.parts["Y"] = {gen_normal(d.rs, n), PartKind::Normal};
  } else if (check_id == "cohen_exp") {
    inst.parts["Z"] = {gen_general(d.rs, n), PartKind::General};
  } else if (check_id == "thompson_exp") {
    inst.parts["A"] = {0.8 * gen_general(d.rs, n), PartKind::General};
    inst.parts["B"] = {0.8 * gen_general(d.rs, n), PartKind::General};
  } else if (check_id == "gt_log" || check_id == "segal" || check_id == "golden_thompson" ||
             check_id == "emi") {
    inst.parts["S"] = {d.rs.uniform(0.5, 1.5) * gen_hermitian(d.rs, n), PartKind::Hermitian};
    inst.parts["T"] = {d.rs.uniform(0.5, 1.5) * gen_hermitian(d.rs, n), PartKind::Hermitian};
  } else if (check_id == "lie_trotter_probe") {
    inst.parts["H"] = {gen_hermitian(d.rs, n), PartKind::Hermitian};
    inst.parts["K"] = {gen_hermitian(d.rs, n), PartKind::Hermitian};
  } else if (check_id == "subunital_psd") {
    const double p = d.pick_p();
    inst.scalars["p"] = p;
    d.add_psd(inst, "A", n, d.pick_profile(false, p, inst), 2.0 * p);
    d.add_psd(inst, "B", n, d.pick_profile(false, p, inst), p);
    inst.map = gen_subunital_map(d.rs, n, n, d.rs.uniform_int(2, 3));
  } else if (check_id == "schur_mask") {
    const double p = d.pick_p();
    inst.scalars["p"] = p;
    d.add_psd(inst, "A", n, d.pick_profile(false, p, inst), 2.0 * p);
    d.add_psd(inst, "B", n, d.pick_profile(false, p, inst), p);
    inst.parts["C"] = {schur_mask_matrix(d.rs, n), PartKind::SchurMask};
  } else if (check_id == "schur_exponent_exchange") {
    d.add_psd(inst, "A", n, SpectrumProfile::WellConditioned);
    d.add_psd(inst, "B", n, SpectrumProfile::WellConditioned);
    const double w = d.rs.uniform(0.8, 2.0);
    const double d1 = d.rs.uniform(0.0, w);
    const double d2 = d.rs.uniform(0.0, d1);
    inst.scalars["p"] = w + d1;
    inst.scalars["q"] = w - d1;
    inst.scalars["r"] = w + d2;
    inst.scalars["s"] = w - d2;
    inst.scalars["alpha"] = d.pick_alpha();
    inst.norm = d.pick_norm(n);
  } else if (check_id == "det_schur_counterexample") {
    d.add_psd(inst, "B", n, SpectrumProfile::WellConditioned);
  } else if (check_id == "loewner_heinz") {
    d.add_psd(inst, "B", n, SpectrumProfile::WellConditioned);
    d.add_psd(inst, "D", n, SpectrumProfile::WellConditioned);
    inst.scalars["c"] = d.rs.uniform(0.1, 1.0);
    inst.scalars["p"] = d.rs.uniform(0.05, 0.95);
  } else if (check_id == "kosaki_holder") {
    inst.parts["X"] = {gen_general(d.rs, n), PartKind::General};
    inst.parts["Y"] = {gen_general(d.rs, n), PartKind::General};
    inst.scalars["p"] = d.rs.uniform(1.25, 4.0);
    inst.scalars["alpha"] = d.pick_alpha();
    inst.norm = d.pick_norm(n);
  } else if (check_id == "littlewood_scalar") {
    const int m_count = d.rs.uniform_int(2, 6);
    inst.n = m_count;
    std::vector<double> a(m_count), w(m_count);
    for (int i = 0; i < m_count; ++i) a[i] = d.rs.uniform(0.1, 3.0);
    for (int i = 0; i < m_count; ++i) w[i] = d.rs.uniform(0.1, 2.0);
    inst.parts["a"] = {ComplexMatrix::diagonal(a), PartKind::General};
    inst.parts["w"] = {ComplexMatrix::diagonal(w), PartKind::General};
    inst.scalars["p"] = d.rs.uniform(0.2, 3.0);
    inst.scalars["q"] = d.rs.uniform(0.2, 3.0);
    inst.scalars["theta"] = d.rs.uniform(0.1, 0.9);
  } else if (check_id == "littlewood_matrix") {
    const int k_terms = d.rs.uniform_int(2, 3);
    inst.scalars["k_terms"] = static_cast<double>(k_terms);
    for (int i = 0; i < k_terms; ++i) {
      d.add_psd(inst, "A" + std::to_string(i), n, SpectrumProfile::WellConditioned);
      inst.parts["Z" + std::to_string(i)] = {gen_general(d.rs, n), PartKind::General};
    }
    inst.scalars["alpha"] = d.pick_alpha();
    inst.norm = d.pick_norm(n);
  } else if (check_id == "poslin_probe") {
    const int m = n + d.rs.uniform_int(0, 1);
    inst.m = m;
    d.add_psd(inst, "A", m, SpectrumProfile::WellConditioned);
    inst.map = gen_subunital_map(d.rs, m, n, d.rs.uniform_int(2, 3));
    inst.scalars["alpha"] = d.pick_alpha();
    inst.norm = d.pick_norm(n);
  } else {
    throw UnknownCheck("gen_instance: no generator for '" + check_id + "'");
  }
  return inst;
}

// ---------------------------------------------------------------------------
// run_check

namespace {

PsdMatrix as_psd(const Instance& inst, const std::string& name) {
  const Part& part = inst.part(name);
  if (part.kind != PartKind::Psd && part.kind != PartKind::SchurMask)
    throw SignatureMismatch("part '" + name + "' is not PSD");
  return PsdMatrix(part.value);
}

double tol_eff(const Instance& inst, double tol) {
  auto it = inst.scalars.find("tol_hint");
  return it == inst.scalars.end() ? tol : std::max(tol, it->second);
}

CheckOutcome base_outcome(const CheckDef& def, const Instance& inst) {
  CheckOutcome out;
  out.check_id = def.id;
  out.seed = inst.seed;
  out.n = inst.n;
  out.expects_violation = def.expects_violation;
  return out;
}

void finish_major(CheckOutcome& out, const MajorizationReport& rep, bool det_equality,
                  const Instance& inst) {
  out.margins = rep.k_margins;
  out.margin = rep.min_margin();
  out.verdict = rep.verdict;
  if (det_equality) out.margin_n = rep.margin_n();
  if (!out.verdict) out.witness = inst;
}

void finish_scalar(CheckOutcome& out, double margin, double tol, const Instance& inst) {
  out.margins = {margin};
  out.margin = margin;
  out.verdict = margin >= -tol;
  if (!out.verdict) out.witness = inst;
}

double log_trace(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s > 0.0 ? std::log(s) : -kMarginSentinel;
}

// shared product groupings so the p = 1 specialization is bit-identical on
// both sides of each sandwich statement
ComplexMatrix aba(const PsdMatrix& a, const ComplexMatrix& mid) {
  return a.matrix() * (mid * a.matrix());
}
ComplexMatrix azbza(const PsdMatrix& a, const ComplexMatrix& z, const PsdMatrix& b) {
  return aba(a, z.adjoint() * (b.matrix() * z));
}

double top_log_eigen(const PsdMatrix& m) {
  const double v = m.eigenvalues().empty() ? 0.0 : m.eigenvalues().front();
  return v > 0.0 ? std::log(v) : -kMarginSentinel;
}

std::vector<double> log_psd_spectrum(const PsdMatrix& m) {
  std::vector<double> logs(m.eigenvalues().size());
  for (size_t i = 0; i < logs.size(); ++i)
    logs[i] = m.eigenvalues()[i] > 0.0 ? std::log(m.eigenvalues()[i])
                                       : -std::numeric_limits<double>::infinity();
  return logs;
}

ProbeGrid default_probe_grid() {
  ProbeGrid g;
  g.ps = {1.0, 1.5, 2.0};
  g.ts = {-0.5, 0.5, 1.5};
  return g;
}

}  // namespace

double tightness_cartesian(double p) {
  if (!(p >= 1.0)) throw BadDomain("tightness_cartesian: p must be >= 1");
  const ComplexMatrix nil{{Complex{0, 0}, Complex{1, 0}}, {Complex{0, 0}, Complex{0, 0}}};
  const auto [x, y] = cartesian(nil);
  const PsdMatrix lhs = psd_power(abs_val(nil), p);
  const ComplexMatrix rhs_m =
      std::pow(2.0, p - 1.0) * (psd_power(abs_val(x), p).matrix() + psd_power(abs_val(y), p).matrix());
  const PsdMatrix rhs = make_psd(rhs_m);
  return lhs.eigenvalues().front() / rhs.eigenvalues().front();
}

CheckOutcome run_check(const std::string& check_id, const Instance& inst, double tol) {
  const CheckDef& def = find_check(check_id);
  const double tol_e = tol_eff(inst, tol);
  CheckOutcome out = base_outcome(def, inst);

  if (check_id == "araki") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const double p = inst.scalar("p");
    const PsdMatrix X = psd_power(make_psd(aba(A, B.matrix())), p);
    const PsdMatrix Y = make_psd(aba(psd_power(A, p), psd_power(B, p).matrix()));
    finish_major(out, log_majorize(X, Y, tol_e), true, inst);

  } else if (check_id == "lieb_thirring") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const int p = static_cast<int>(inst.scalar("p"));
    const ComplexMatrix lhs = matrix_power(aba(A, B.matrix()), p);
    const ComplexMatrix rhs =
        aba(psd_power(A, p), psd_power(B, p).matrix());
    const double log_l = log_trace(make_psd(lhs).eigenvalues());
    const double log_r = log_trace(make_psd(rhs).eigenvalues());
    const double margin = (log_l == -kMarginSentinel && log_r == -kMarginSentinel)
                              ? 0.0
                              : log_r - log_l;
    finish_scalar(out, margin, tol_e, inst);

  } else if (check_id == "cor1_norm") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const ComplexMatrix& Z = inst.part("Z").value;
    const double p = inst.scalar("p");
    const double alpha = inst.scalar("alpha");
    const SymmetricNorm& norm = *inst.norm;
    const PsdMatrix M1 = make_psd(azbza(A, Z, B));
    const PsdMatrix M2 = make_psd(azbza(psd_power(A, p), Z, psd_power(B, p)));
    const double lhs = norm.log_of_powered(log_psd_spectrum(M1), alpha * p);
    const double rhs = norm.log_of_powered(log_psd_spectrum(M2), alpha);
    double margin;
    if (std::isinf(lhs) && std::isinf(rhs)) margin = 0.0;
    else if (std::isinf(lhs)) margin = kMarginSentinel;
    else if (std::isinf(rhs)) margin = -kMarginSentinel;
    else margin = rhs - lhs;
    finish_scalar(out, margin, tol_e, inst);

  } else if (check_id == "striking") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const ComplexMatrix& Z = inst.part("Z").value;
    const double p = inst.scalar("p");
    const PsdMatrix X = psd_power(make_psd(azbza(A, Z, B)), p);
    const PsdMatrix Y = make_psd(azbza(psd_power(A, p), Z, psd_power(B, p)));
    finish_major(out, weak_log_majorize(X, Y, tol_e), false, inst);

  } else if (check_id == "super_expansive") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const ComplexMatrix& Z = inst.part("Z").value;
    const double p = inst.scalar("p");
    const PsdMatrix X = psd_power(make_psd(azbza(A, Z, B)), p);
    const PsdMatrix Y = make_psd(azbza(psd_power(A, p), Z, psd_power(B, p)));
    finish_major(out, super_weak_log_majorize(X, Y, tol_e), false, inst);

  } else if (check_id == "trace_econvex" || check_id == "trace_econcave") {
    const bool convex = check_id == "trace_econvex";
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const ComplexMatrix& Z = inst.part("Z").value;
    const double p = inst.scalar("p");
    const auto& cat = convex ? econvex_catalog() : econcave_catalog();
    const auto& fn = cat[static_cast<size_t>(inst.scalar("f_id"))];
    const PsdMatrix M1 = make_psd(azbza(A, Z, B));
    const PsdMatrix M2 = make_psd(azbza(psd_power(A, p), Z, psd_power(B, p)));
    double s1 = 0.0, s2 = 0.0;
    for (double v : M1.eigenvalues()) s1 += fn.f(std::pow(v, p));
    for (double v : M2.eigenvalues()) s2 += fn.f(v);
    out.note = "trace function " + fn.id;
    if (convex) {
      double margin;
      if (s1 <= 0.0 && s2 <= 0.0) margin = 0.0;
      else if (s1 <= 0.0) margin = kMarginSentinel;
      else if (s2 <= 0.0) margin = -kMarginSentinel;
      else margin = std::log(s2) - std::log(s1);
      finish_scalar(out, margin, tol_e, inst);
    } else {
      const double margin = (s1 - s2) / std::max({1.0, std::abs(s1), std::abs(s2)});
      finish_scalar(out, margin, tol_e, inst);
    }

  } else if (check_id == "triangle_normal") {
    const ComplexMatrix& X = inst.part("X").value;
    const ComplexMatrix& Y = inst.part("Y").value;
    const PsdMatrix lhs = abs_val(X + Y);
    const PsdMatrix rhs = make_psd(abs_val(X).matrix() + abs_val(Y).matrix());
    finish_major(out, weak_log_majorize(lhs, rhs, tol_e), false, inst);

  } else if (check_id == "araki_normal") {
    const PsdMatrix A = as_psd(inst, "A");
    const ComplexMatrix& X = inst.part("X").value;
    const double p = inst.scalar("p");
    const PsdMatrix lhs = psd_power(abs_val(aba(A, X)), p);
    const PsdMatrix rhs = make_psd(aba(psd_power(A, p), psd_power(abs_val(X), p).matrix()));
    finish_major(out, log_majorize(lhs, rhs, tol_e), true, inst);

  } else if (check_id == "main_normal_map") {
    const PsdMatrix A = as_psd(inst, "A");
    const ComplexMatrix& N = inst.part("N").value;
    const double p = inst.scalar("p");
    const KrausMap& map = *inst.map;
    const PsdMatrix lhs = psd_power(abs_val(aba(A, map.apply(N))), p);
    const PsdMatrix rhs =
        make_psd(aba(psd_power(A, p), map.apply(psd_power(abs_val(N), p).matrix())));
    finish_major(out, weak_log_majorize(lhs, rhs, tol_e), false, inst);

  } else if (check_id == "m_normals") {
    const PsdMatrix A = as_psd(inst, "A");
    const double p = inst.scalar("p");
    const int m_count = static_cast<int>(inst.scalar("m_count"));
    ComplexMatrix sum(inst.n, inst.n);
    ComplexMatrix abs_sum(inst.n, inst.n);
    for (int k = 0; k < m_count; ++k) {
      const ComplexMatrix& xk = inst.part("X" + std::to_string(k)).value;
      sum += xk;
      abs_sum += psd_power(abs_val(xk), p).matrix();
    }
    const PsdMatrix lhs = psd_power(abs_val(aba(A, sum)), p);
    const PsdMatrix rhs =
        make_psd(std::pow(static_cast<double>(m_count), p - 1.0) *
                 aba(psd_power(A, p), abs_sum));
    finish_major(out, weak_log_majorize(lhs, rhs, tol_e), false, inst);

  } else if (check_id == "cartesian") {
    const PsdMatrix A = as_psd(inst, "A");
    const ComplexMatrix& T = inst.part("T").value;
    const double p = inst.scalar("p");
    const auto [X, Y] = cartesian(T);
    const PsdMatrix lhs = psd_power(abs_val(aba(A, T)), p);
    const ComplexMatrix rhs_mid =
        psd_power(abs_val(X), p).matrix() + psd_power(abs_val(Y), p).matrix();
    const PsdMatrix rhs = make_psd(std::pow(2.0, p - 1.0) * aba(psd_power(A, p), rhs_mid));
    finish_major(out, weak_log_majorize(lhs, rhs, tol_e), false, inst);

  } else if (check_id == "sym_part") {
    const PsdMatrix A = as_psd(inst, "A");
    const ComplexMatrix& T = inst.part("T").value;
    const double p = inst.scalar("p");
    const ComplexMatrix sym = 0.5 * (T + T.adjoint());
    const PsdMatrix lhs = psd_power(abs_val(aba(A, sym)), p);
    const ComplexMatrix rhs_mid =
        0.5 * (psd_power(abs_val(T), p).matrix() + psd_power(abs_val(T.adjoint()), p).matrix());
    const PsdMatrix rhs = make_psd(aba(psd_power(A, p), rhs_mid));
    finish_major(out, weak_log_majorize(lhs, rhs, tol_e), false, inst);

  } else if (check_id == "schur_normals" || check_id == "schur_TT") {
    const PsdMatrix A = as_psd(inst, "A");
    const double p = inst.scalar("p");
    ComplexMatrix X, Y;
    if (check_id == "schur_normals") {
      X = inst.part("X").value;
      Y = inst.part("Y").value;
    } else {
      X = inst.part("T").value;
      Y = X.adjoint();
    }
    const PsdMatrix lhs = psd_power(abs_val(aba(A, schur_product(X, Y))), p);
    const ComplexMatrix rhs_mid =
        schur_product(psd_power(abs_val(X), p).matrix(), psd_power(abs_val(Y), p).matrix());
    const PsdMatrix rhs = make_psd(aba(psd_power(A, p), rhs_mid));
    finish_major(out, weak_log_majorize(lhs, rhs, tol_e), false, inst);

  } else if (check_id == "cohen_exp") {
    const ComplexMatrix& Z = inst.part("Z").value;
    const PsdMatrix lhs = abs_val(expm_general(Z));
    const PsdMatrix rhs = make_psd(expm(hermitian_part(Z)));
    finish_major(out, log_majorize(lhs, rhs, tol_e), true, inst);

  } else if (check_id == "thompson_exp") {
    const ComplexMatrix& A = inst.part("A").value;
    const ComplexMatrix& B = inst.part("B").value;
    const PsdMatrix lhs = abs_val(expm_general(A + B));
    const ComplexMatrix ea = expm(0.5 * hermitian_part(A));
    const ComplexMatrix eb = expm(hermitian_part(B));
    const PsdMatrix rhs = make_psd(ea * (eb * ea));
    finish_major(out, log_majorize(lhs, rhs, tol_e), true, inst);

  } else if (check_id == "gt_log" || check_id == "segal" || check_id == "golden_thompson") {
    const ComplexMatrix& S = inst.part("S").value;
    const ComplexMatrix& T = inst.part("T").value;
    const PsdMatrix lhs = make_psd(expm(S + T));
    const ComplexMatrix es = expm(0.5 * S);
    const PsdMatrix rhs = make_psd(es * (expm(T) * es));
    if (check_id == "gt_log") {
      finish_major(out, log_majorize(lhs, rhs, tol_e), true, inst);
    } else if (check_id == "segal") {
      finish_scalar(out, top_log_eigen(rhs) - top_log_eigen(lhs), tol_e, inst);
    } else {
      finish_scalar(out, log_trace(rhs.eigenvalues()) - log_trace(lhs.eigenvalues()), tol_e, inst);
    }

  } else if (check_id == "emi") {
    const ComplexMatrix& A = inst.part("S").value;
    const ComplexMatrix& B = inst.part("T").value;
    const ComplexMatrix ea = expm(0.5 * A);
    const PsdMatrix core = make_psd(ea * (expm(-1.0 * B) * ea));
    // log of a positive definite matrix through its spectrum
    std::vector<double> log_values(core.eigenvalues().size());
    for (size_t i = 0; i < log_values.size(); ++i)
      log_values[i] = std::log(std::max(core.eigenvalues()[i], 1e-300));
    ComplexMatrix log_core(inst.n, inst.n);
    for (int i = 0; i < inst.n; ++i)
      for (int j = 0; j < inst.n; ++j) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < inst.n; ++k)
          acc += core.spectrum().vectors(i, k) * log_values[k] *
                 std::conj(core.spectrum().vectors(j, k));
        log_core(i, j) = acc;
      }
    const auto sig_delta = svd(A - B).singulars;
    const auto sig_log = svd(hermitian_part(log_core)).singulars;
    out.margins.resize(inst.n);
    double run_a = 0.0, run_b = 0.0;
    out.margin = kMarginSentinel;
    for (int k = 0; k < inst.n; ++k) {
      run_a += sig_delta[k];
      run_b += sig_log[k];
      out.margins[k] = run_b - run_a;  // additive Ky Fan margins
      out.margin = std::min(out.margin, out.margins[k]);
    }
    out.note = "additive margins";
    out.verdict = out.margin >= -tol_e;
    if (!out.verdict) out.witness = inst;

  } else if (check_id == "lie_trotter_probe") {
    const ComplexMatrix& H = inst.part("H").value;
    const ComplexMatrix& K = inst.part("K").value;
    const ComplexMatrix target = expm(H + K);
    std::vector<double> errs;
    for (int j = 0; j <= 10; ++j) {
      const int m = 1 << j;
      const ComplexMatrix eh = expm((0.5 / m) * H);
      const ComplexMatrix ek = expm((1.0 / m) * K);
      const ComplexMatrix step = eh * (ek * eh);
      errs.push_back(operator_norm(matrix_power(step, m) - target));
    }
    out.margins = errs;
    double margin = 1e-4 - errs.back();
    for (size_t j = 0; j + 1 < errs.size(); ++j)
      margin = std::min(margin, errs[j] - errs[j + 1] + 1e-12);
    out.margin = margin;
    out.note = "absolute margins: final threshold then per-doubling decrements";
    out.verdict = margin >= -tol_e;
    if (!out.verdict) out.witness = inst;

  } else if (check_id == "subunital_psd") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const double p = inst.scalar("p");
    const KrausMap& map = *inst.map;
    const PsdMatrix X = psd_power(make_psd(aba(A, map.apply(B.matrix()))), p);
    const PsdMatrix Y = make_psd(aba(psd_power(A, p), map.apply(psd_power(B, p).matrix())));
    finish_major(out, weak_log_majorize(X, Y, tol_e), false, inst);

  } else if (check_id == "schur_mask") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const ComplexMatrix& C = inst.part("C").value;
    const double p = inst.scalar("p");
    const PsdMatrix X = psd_power(make_psd(aba(A, schur_product(C, B.matrix()))), p);
    const PsdMatrix Y =
        make_psd(aba(psd_power(A, p), schur_product(C, psd_power(B, p).matrix())));
    finish_major(out, weak_log_majorize(X, Y, tol_e), false, inst);

  } else if (check_id == "schur_exponent_exchange") {
    const PsdMatrix A = as_psd(inst, "A"), B = as_psd(inst, "B");
    const double alpha = inst.scalar("alpha");
    const SymmetricNorm& norm = *inst.norm;
    auto log_term = [&](double x, double y) {
      const PsdMatrix m =
          make_psd(schur_product(psd_power(A, x).matrix(), psd_power(B, y).matrix()));
      return norm.log_of_powered(log_psd_spectrum(m), alpha);
    };
    const double p = inst.scalar("p"), q = inst.scalar("q");
    const double r = inst.scalar("r"), s = inst.scalar("s");
    const double t_pq = log_term(p, q), t_qp = log_term(q, p);
    const double t_rs = log_term(r, s), t_sr = log_term(s, r);
    const double margin_prod = (t_pq + t_qp) - (t_rs + t_sr);
    const double sum_outer = std::exp(t_pq) + std::exp(t_qp);
    const double sum_inner = std::exp(t_rs) + std::exp(t_sr);
    const double margin_sum = (sum_outer - sum_inner) / std::max(1.0, sum_outer);
    out.margins = {margin_prod, margin_sum};
    out.margin = std::min(margin_prod, margin_sum);
    out.verdict = out.margin >= -tol_e;
    if (!out.verdict) out.witness = inst;

  } else if (check_id == "det_schur_counterexample") {
    const PsdMatrix B = as_psd(inst, "B");
    const ComplexMatrix& bm = B.matrix();
    const ComplexMatrix b2 = bm * bm;
    double lhs = 0.0, rhs = 0.0;  // 2 log det(I o B) vs log det(I o B^2)
    for (int i = 0; i < inst.n; ++i) {
      lhs += 2.0 * std::log(std::max(bm(i, i).real(), 1e-300));
      rhs += std::log(std::max(b2(i, i).real(), 1e-300));
    }
    const double margin = lhs - rhs;  // >= 0 would make the super relation's det step hold
    out.margins = {margin};
    out.margin = margin;
    out.verdict = margin >= -tol_e;
    if (!out.verdict) {
      out.note = "expected-counterexample";
      out.witness = inst;
    }

  } else if (check_id == "loewner_heinz") {
    const PsdMatrix B = as_psd(inst, "B"), D = as_psd(inst, "D");
    const double c = inst.scalar("c");
    const double p = inst.scalar("p");
    const PsdMatrix A = make_psd(B.matrix() + c * D.matrix());
    // direct route: A^p - B^p stays PSD
    EigenSystem diff = hermitian_eigen(psd_power(A, p).matrix() - psd_power(B, p).matrix());
    const double direct = diff.values.back();
    // proof route: f(t) = ||A^{-t/2} B^t A^{-t/2}||_inf is log-convex with f(0) = 1
    auto f_log = [&](double t) {
      const PsdMatrix half = psd_power(A, -t / 2.0);
      return top_log_eigen(make_psd(aba(half, psd_power(B, t).matrix())));
    };
    const double route = p * f_log(1.0) - f_log(p);
    out.margins = {direct, route};
    out.margin = std::min(direct, route);
    out.note = "margins: min eigenvalue of A^p - B^p, then the log-convexity route";
    out.verdict = direct >= -1e-9 && route >= -tol_e;
    if (!out.verdict) out.witness = inst;

  } else if (check_id == "kosaki_holder") {
    const ComplexMatrix& X = inst.part("X").value;
    const ComplexMatrix& Y = inst.part("Y").value;
    const double p = inst.scalar("p");
    const double q = p / (p - 1.0);
    const double alpha = inst.scalar("alpha");
    const SymmetricNorm& norm = *inst.norm;
    const double lhs = norm.log_of_powered(log_psd_spectrum(abs_val(X * Y)), alpha);
    const double rx = norm.log_of_powered(log_psd_spectrum(abs_val(X)), alpha * p);
    const double ry = norm.log_of_powered(log_psd_spectrum(abs_val(Y)), alpha * q);
    double margin;
    if (std::isinf(lhs)) margin = kMarginSentinel;
    else if (std::isinf(rx) || std::isinf(ry)) margin = -kMarginSentinel;
    else margin = rx / p + ry / q - lhs;
    finish_scalar(out, margin, tol_e, inst);

  } else if (check_id == "littlewood_scalar") {
    const ComplexMatrix& am = inst.part("a").value;
    const ComplexMatrix& wm = inst.part("w").value;
    const double p = inst.scalar("p"), q = inst.scalar("q"), theta = inst.scalar("theta");
    auto log_norm = [&](double s) {
      double acc = 0.0;
      for (int i = 0; i < am.rows(); ++i)
        acc += wm(i, i).real() * std::pow(am(i, i).real(), s);
      return std::log(acc) / s;
    };
    const double lhs = log_norm(1.0 / (theta * p + (1.0 - theta) * q));
    const double rhs = theta * log_norm(1.0 / p) + (1.0 - theta) * log_norm(1.0 / q);
    finish_scalar(out, rhs - lhs, tol_e, inst);

  } else if (check_id == "littlewood_matrix") {
    const int k_terms = static_cast<int>(inst.scalar("k_terms"));
    std::vector<ComplexMatrix> as, zs;
    for (int i = 0; i < k_terms; ++i) {
      as.push_back(inst.part("A" + std::to_string(i)).value);
      zs.push_back(inst.part("Z" + std::to_string(i)).value);
    }
    FunctionalSpec spec{PsdMatrix(direct_sum(as)), PsdMatrix(ComplexMatrix::identity(1)),
                        vstack(zs), inst.scalar("alpha"), *inst.norm, Variant::Congruence};
    const ProbeReport rep = probe_logconvexity(spec, default_probe_grid(), tol_e);
    out.margins = {rep.min_residual_margin};
    out.margin = rep.min_residual_margin;
    out.note = "midpoint log-convexity probe";
    out.verdict = rep.verdict;
    if (!out.verdict) out.witness = inst;

  } else if (check_id == "poslin_probe") {
    const PsdMatrix A = as_psd(inst, "A");
    const KrausMap& map = *inst.map;
    const double alpha = inst.scalar("alpha");
    const SymmetricNorm norm = *inst.norm;
    auto log_f = [&](double p, double t) {
      const PsdMatrix image = make_psd(map.apply(psd_power(A, t / p).matrix()));
      return norm.log_of_powered(log_psd_spectrum(image), alpha * p);
    };
    const ProbeReport rep = midpoint_probe(log_f, default_probe_grid(), tol_e);
    out.margins = {rep.min_residual_margin};
    out.margin = rep.min_residual_margin;
    out.note = "midpoint log-convexity probe";
    out.verdict = rep.verdict;
    if (!out.verdict) out.witness = inst;

  } else {
    throw UnknownCheck("run_check: no runner for '" + check_id + "'");
  }
  return out;
}

std::vector<CheckOutcome> run_check_trials(const std::string& check_id, const SweepParams& params,
                                           int trials, uint64_t seed, double tol) {
  std::vector<CheckOutcome> out;
  out.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const Instance inst = gen_instance(check_id, seed, static_cast<uint64_t>(t), params);
    out.push_back(run_check(check_id, inst, tol));
  }
  return out;
}

std::vector<CheckOutcome> run_suite(const std::string& suite_id, const SweepParams& params,
                                    int trials, uint64_t seed, double tol) {
  std::vector<CheckOutcome> out;
  for (const std::string& id : suite_checks(suite_id)) {
    std::vector<CheckOutcome> part = run_check_trials(id, params, trials, seed, tol);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace majorlab
