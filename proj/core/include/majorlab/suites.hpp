#ifndef MAJORLAB_SUITES_HPP
#define MAJORLAB_SUITES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "majorlab/functional.hpp"
#include "majorlab/major.hpp"
#include "majorlab/posmap.hpp"
#include "majorlab/rng.hpp"

namespace majorlab {

// ---------------------------------------------------------------------------
// instance generators

enum class SpectrumProfile { WellConditioned, NearSingular, RankDeficient };

PsdMatrix gen_psd(RandomStream& rs, int n, SpectrumProfile profile,
                  double power_budget = 1.0);
ComplexMatrix gen_unitary(RandomStream& rs, int n);
ComplexMatrix gen_normal(RandomStream& rs, int n);
ComplexMatrix gen_contraction(RandomStream& rs, int n);
ComplexMatrix gen_expansive(RandomStream& rs, int n);
ComplexMatrix gen_hermitian(RandomStream& rs, int n);  // scaled to ||.||_inf <= 1
ComplexMatrix gen_general(RandomStream& rs, int n);
KrausMap gen_subunital_map(RandomStream& rs, int m, int n, int k_terms);

// Seed-taking forms (one-shot streams).
PsdMatrix gen_psd(uint64_t seed, int n, SpectrumProfile profile);
ComplexMatrix gen_contraction(uint64_t seed, int n);
ComplexMatrix gen_normal(uint64_t seed, int n);
ComplexMatrix gen_expansive(uint64_t seed, int n);
ComplexMatrix gen_hermitian(uint64_t seed, int n);
KrausMap gen_subunital_map(uint64_t seed, int m, int n, int k_terms);

// ---------------------------------------------------------------------------
// instances and outcomes

enum class PartKind {
  Psd,
  Hermitian,
  Normal,
  Contraction,
  Expansive,
  General,
  SchurMask,  // PSD with diagonal <= 1
  Unitary
};

std::string part_kind_id(PartKind k);
PartKind parse_part_kind(const std::string& id);

struct Part {
  ComplexMatrix value;
  PartKind kind = PartKind::General;
};

// Everything one check consumes. Regeneratable from (seed, gen_id, n);
// serialized round trips are bit-stable.
struct Instance {
  uint64_t seed = 0;
  std::string gen_id;
  int n = 0;
  int m = 0;
  std::map<std::string, Part> parts;
  std::map<std::string, double> scalars;  // p, alpha, theta, q, r, s, f_id, ...
  std::optional<KrausMap> map;
  std::optional<SymmetricNorm> norm;

  const Part& part(const std::string& name) const;  // SignatureMismatch when absent
  double scalar(const std::string& name) const;
};

struct CheckOutcome {
  std::string check_id;
  uint64_t seed = 0;
  int n = 0;
  bool verdict = false;  // the stated inequality held
  bool expects_violation = false;
  std::vector<double> margins;
  double margin = 0.0;                   // headline (most negative) margin
  std::optional<double> margin_n;        // determinant-equality margin when claimed
  std::string note;
  std::optional<Instance> witness;       // populated when the statement failed
};

// A failed ordinary check is a failure; a violated counterexample check is
// the designed outcome.
bool outcome_passed(const CheckOutcome& o);

// ---------------------------------------------------------------------------
// e-convex / e-concave trace-function catalog

struct TraceFunction {
  std::string id;
  std::function<double(double)> f;
};
const std::vector<TraceFunction>& econvex_catalog();
const std::vector<TraceFunction>& econcave_catalog();

// Sampled certification that f(e^s) is midpoint convex (resp. concave) on a
// grid of `points` values of s in [lo, hi].
bool certify_econvex(const std::function<double(double)>& f, int points, double lo, double hi,
                     double tol);
bool certify_econcave(const std::function<double(double)>& f, int points, double lo, double hi,
                      double tol);

// ---------------------------------------------------------------------------
// check registry

struct SweepParams {
  std::vector<int> dims = {3};
  std::vector<double> pvals = {1.0, 1.5, 2.0, 3.0};
  std::vector<double> alphas = {0.5, 1.0, 2.0};
};

struct CheckDef {
  std::string id;
  std::string family;
  bool expects_violation = false;
  bool det_equality = false;  // Log (not just weak-log) relation claimed
};

const std::vector<CheckDef>& registry();
std::vector<std::string> registry_ids();
const CheckDef& find_check(const std::string& id);  // UnknownCheck

std::vector<std::string> suite_ids();
std::vector<std::string> suite_checks(const std::string& suite_id);  // UnknownSuite

// Deterministic instance for (check, seed, trial) under the sweep parameters.
Instance gen_instance(const std::string& check_id, uint64_t seed, uint64_t trial,
                      const SweepParams& params);

CheckOutcome run_check(const std::string& check_id, const Instance& inst, double tol);

std::vector<CheckOutcome> run_suite(const std::string& suite_id, const SweepParams& params,
                                    int trials, uint64_t seed, double tol);
std::vector<CheckOutcome> run_check_trials(const std::string& check_id, const SweepParams& params,
                                           int trials, uint64_t seed, double tol);

// lambda_1 ratio on the paper's nilpotent witness; equals 1 for every p >= 1,
// certifying that the 2^{p-1} constant is attained at k = 1.
double tightness_cartesian(double p);

}  // namespace majorlab

#endif
