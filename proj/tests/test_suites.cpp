#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "majorlab/report.hpp"
#include "majorlab/suites.hpp"

using namespace majorlab;

TEST_CASE("generators: determinism, contraction, expansion, rank deficiency") {
  // same seed, same stream -> bitwise identical draws
  RandomStream a(123), b(123);
  const ComplexMatrix ga = gen_general(a, 4);
  const ComplexMatrix gb = gen_general(b, 4);
  CHECK(ComplexMatrix::approx_equal(ga, gb, 0.0));

  RandomStream rs(124);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    CHECK(operator_norm(gen_contraction(rs, n)) <= 1.0 + 1e-12);
    const auto se = svd(gen_expansive(rs, n)).singulars;
    CHECK(se.back() >= 1.0 - 1e-9);
    const PsdMatrix rd = gen_psd(rs, n, SpectrumProfile::RankDeficient);
    CHECK(rd.rank() < n);
    CHECK(rd.eigenvalues().back() == 0.0);
    const PsdMatrix ns = gen_psd(rs, n, SpectrumProfile::NearSingular);
    CHECK(ns.eigenvalues().back() <= 1.1e-3);
    CHECK(ns.eigenvalues().back() > 0.0);
    const ComplexMatrix h = gen_hermitian(rs, n);
    CHECK(operator_norm(h) <= 1.0 + 1e-12);
  }
}

TEST_CASE("generators: unitary and normal structure") {
  RandomStream rs(125);
  const ComplexMatrix u = gen_unitary(rs, 5);
  CHECK((u.adjoint() * u - ComplexMatrix::identity(5)).max_abs() <= 1e-12);
  const ComplexMatrix n = gen_normal(rs, 5);
  CHECK((n.adjoint() * n - n * n.adjoint()).max_abs() <= 1e-10);
}

TEST_CASE("registry: expected ids, stable strings") {
  const auto ids = registry_ids();
  const std::set<std::string> set(ids.begin(), ids.end());
  for (const char* want :
       {"araki", "lieb_thirring", "triangle_normal", "araki_normal", "cohen_exp", "cor1_norm",
        "striking", "super_expansive", "trace_econvex", "trace_econcave", "main_normal_map",
        "subunital_psd", "schur_mask", "m_normals", "cartesian", "thompson_exp", "gt_log",
        "segal", "golden_thompson", "emi", "lie_trotter_probe", "sym_part", "schur_normals",
        "schur_TT", "loewner_heinz", "kosaki_holder", "littlewood_scalar", "littlewood_matrix",
        "poslin_probe", "schur_exponent_exchange", "det_schur_counterexample"})
    CHECK(set.count(want) == 1);
  CHECK_THROWS_AS(find_check("no_such_check"), UnknownCheck);
  CHECK_THROWS_AS(suite_checks("no_such_suite"), UnknownSuite);
  CHECK(find_check("det_schur_counterexample").expects_violation);
  for (const char* id : {"araki", "araki_normal", "cohen_exp", "thompson_exp", "gt_log"})
    CHECK(find_check(id).det_equality);
}

TEST_CASE("instances regenerate bit-identically and round trip through JSON") {
  SweepParams params;
  params.dims = {3};
  const Instance one = gen_instance("striking", 42, 7, params);
  const Instance two = gen_instance("striking", 42, 7, params);
  CHECK(to_json(one).dump() == to_json(two).dump());

  const Instance back = instance_from_json(to_json(one));
  CHECK(to_json(back).dump() == to_json(one).dump());
  CHECK(back.seed == one.seed);
  CHECK(back.part("Z").kind == PartKind::Contraction);

  CHECK_THROWS_AS(one.part("missing"), SignatureMismatch);
  CHECK_THROWS_AS(one.scalar("missing"), SignatureMismatch);
}

TEST_CASE("every registry check holds on its random instances") {
  SweepParams params;
  params.dims = {2, 3, 4};
  for (const auto& def : registry()) {
    int violations = 0;
    for (uint64_t trial = 0; trial < 10; ++trial) {
      const Instance inst = gen_instance(def.id, 31, trial, params);
      const CheckOutcome out = run_check(def.id, inst, 1e-9);
      if (def.expects_violation) {
        if (!out.verdict) ++violations;
        continue;
      }
      CHECK_MESSAGE(out.margin >= -1e-8, def.id, " trial ", trial, " margin ", out.margin);
      CHECK_MESSAGE(out.verdict, def.id, " trial ", trial);
      if (def.det_equality) {
        REQUIRE(out.margin_n.has_value());
        CHECK_MESSAGE(std::abs(*out.margin_n) <= 1e-8, def.id, " det margin ", *out.margin_n);
      }
      if (!out.verdict) REQUIRE(out.witness.has_value());
    }
    if (def.expects_violation) CHECK(violations >= 9);  // generic B refutes the det claim
  }
}

TEST_CASE("araki: commuting operands give exactly zero margins and a Log verdict") {
  RandomStream rs(126);
  const ComplexMatrix q = gen_unitary(rs, 3);
  std::vector<double> da = {2.0, 1.0, 0.5}, db = {1.5, 1.2, 0.3};
  Instance inst;
  inst.gen_id = "araki";
  inst.n = 3;
  inst.m = 3;
  inst.parts["A"] = {hermitian_part(q * ComplexMatrix::diagonal(da) * q.adjoint()), PartKind::Psd};
  inst.parts["B"] = {hermitian_part(q * ComplexMatrix::diagonal(db) * q.adjoint()), PartKind::Psd};
  inst.scalars["p"] = 2.0;
  const CheckOutcome out = run_check("araki", inst, 1e-8);
  CHECK(out.verdict);
  for (double m : out.margins) CHECK(std::abs(m) <= 1e-9);
  CHECK(std::abs(*out.margin_n) <= 1e-9);
}

TEST_CASE("golden_thompson: closed-form 2x2 slack") {
  Instance inst;
  inst.gen_id = "golden_thompson";
  inst.n = 2;
  inst.m = 2;
  inst.parts["S"] = {ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0}), PartKind::Hermitian};
  inst.parts["T"] = {ComplexMatrix{{Complex{0, 0}, Complex{1, 0}},
                                   {Complex{1, 0}, Complex{0, 0}}},
                     PartKind::Hermitian};

  const double tr_lhs = 2.0 * std::cosh(std::sqrt(2.0));
  const double tr_rhs = 2.0 * std::cosh(1.0) * std::cosh(1.0);
  const double slack = tr_rhs - tr_lhs;
  CHECK(slack == doctest::Approx(0.4058).epsilon(2e-4));

  const CheckOutcome out = run_check("golden_thompson", inst, 1e-9);
  CHECK(out.verdict);
  CHECK(out.margin == doctest::Approx(std::log(tr_rhs / tr_lhs)).epsilon(1e-10));
  // the implied absolute slack matches the closed form well inside 1e-6
  const double slack_from_margin = tr_lhs * (std::exp(out.margin) - 1.0);
  CHECK(std::abs(slack_from_margin - slack) <= 1e-6);
}

TEST_CASE("det_schur_counterexample: the all-ones 2x2 mask") {
  Instance inst;
  inst.gen_id = "det_schur_counterexample";
  inst.n = 2;
  inst.m = 2;
  ComplexMatrix ones(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ones(i, j) = 1.0;
  inst.parts["B"] = {ones, PartKind::Psd};
  const CheckOutcome out = run_check("det_schur_counterexample", inst, 1e-9);
  CHECK_FALSE(out.verdict);                 // det^2(I o B) = 1 < 4 = det(I o B^2)
  CHECK(outcome_passed(out));               // ... which is the expected outcome
  CHECK(out.margin == doctest::Approx(-std::log(4.0)).epsilon(1e-12));
  CHECK(out.note == "expected-counterexample");
  REQUIRE(out.witness.has_value());
}

TEST_CASE("tightness_cartesian: the nilpotent witness saturates 2^{p-1}") {
  for (double p : {1.0, 2.0, 3.0})
    CHECK(tightness_cartesian(p) == doctest::Approx(1.0).epsilon(1e-10));
  // shaving the constant would break the bound at k = 1
  const ComplexMatrix nil{{Complex{0, 0}, Complex{1, 0}}, {Complex{0, 0}, Complex{0, 0}}};
  const auto [x, y] = cartesian(nil);
  const double p = 2.0;
  const double eps = 0.05;
  const ComplexMatrix rhs =
      (std::pow(2.0, p - 1.0) - eps) *
      (psd_power(abs_val(x), p).matrix() + psd_power(abs_val(y), p).matrix());
  const double ratio =
      psd_power(abs_val(nil), p).eigenvalues().front() / make_psd(rhs).eigenvalues().front();
  CHECK(ratio > 1.0);
}

TEST_CASE("e-convexity catalog certifies on a 101-point grid") {
  for (const auto& fn : econvex_catalog())
    CHECK_MESSAGE(certify_econvex(fn.f, 101, -5.0, 5.0, 1e-12), fn.id);
  for (const auto& fn : econcave_catalog())
    CHECK_MESSAGE(certify_econcave(fn.f, 101, -5.0, 5.0, 1e-12), fn.id);
  // and the certification can fail: t -> -t^2 is not e-convex
  CHECK_FALSE(certify_econvex([](double t) { return -t * t; }, 101, -5.0, 5.0, 1e-12));
}

TEST_CASE("trace_econvex with the identity function reproduces Lieb-Thirring") {
  SweepParams params;
  params.dims = {3};
  for (uint64_t trial = 0; trial < 6; ++trial) {
    Instance lt = gen_instance("lieb_thirring", 77, trial, params);
    lt.scalars["p"] = static_cast<double>(1 + trial % 3);  // integer exponents 1..3

    Instance tr;
    tr.gen_id = "trace_econvex";
    tr.n = lt.n;
    tr.m = lt.m;
    tr.parts["A"] = lt.parts["A"];
    tr.parts["B"] = lt.parts["B"];
    tr.parts["Z"] = {ComplexMatrix::identity(lt.n), PartKind::Contraction};
    tr.scalars["p"] = lt.scalars["p"];
    tr.scalars["f_id"] = 0;  // f(t) = t
    if (lt.scalars.count("tol_hint")) tr.scalars["tol_hint"] = lt.scalars["tol_hint"];

    const CheckOutcome a = run_check("lieb_thirring", lt, 1e-9);
    const CheckOutcome b = run_check("trace_econvex", tr, 1e-9);
    CHECK(a.verdict);
    CHECK(b.verdict);
    // same traces through two routes: integer matrix powers vs spectral f
    CHECK(a.margin == doctest::Approx(b.margin).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("cartesian at m = 2 agrees with m_normals on shared instances") {
  SweepParams params;
  params.dims = {3};
  for (uint64_t trial = 0; trial < 6; ++trial) {
    const Instance cart = gen_instance("cartesian", 88, trial, params);
    const auto [x, y] = cartesian(cart.part("T").value);

    Instance mn;
    mn.gen_id = "m_normals";
    mn.n = cart.n;
    mn.m = cart.m;
    mn.parts["A"] = cart.parts.at("A");
    mn.parts["X0"] = {x, PartKind::Normal};
    mn.parts["X1"] = {Complex{0, 1} * y, PartKind::Normal};
    mn.scalars["p"] = cart.scalar("p");
    mn.scalars["m_count"] = 2;
    if (cart.scalars.count("tol_hint")) mn.scalars["tol_hint"] = cart.scalars.at("tol_hint");

    const CheckOutcome a = run_check("cartesian", cart, 1e-9);
    const CheckOutcome b = run_check("m_normals", mn, 1e-9);
    CHECK(a.verdict);
    CHECK(b.verdict);
    REQUIRE(a.margins.size() == b.margins.size());
    for (size_t k = 0; k < a.margins.size(); ++k)
      CHECK(a.margins[k] == doctest::Approx(b.margins[k]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("schur_normals contains the classical A = I case") {
  RandomStream rs(127);
  for (int trial = 0; trial < 5; ++trial) {
    Instance inst;
    inst.gen_id = "schur_normals";
    inst.n = 3;
    inst.m = 3;
    inst.parts["A"] = {ComplexMatrix::identity(3), PartKind::Psd};
    inst.parts["X"] = {gen_normal(rs, 3), PartKind::Normal};
    inst.parts["Y"] = {gen_normal(rs, 3), PartKind::Normal};
    inst.scalars["p"] = 1.0;
    CHECK(run_check("schur_normals", inst, 1e-9).verdict);
  }
}

TEST_CASE("loewner_heinz carries both the direct and the proof-route margins") {
  SweepParams params;
  params.dims = {3, 4};
  for (uint64_t trial = 0; trial < 8; ++trial) {
    const Instance inst = gen_instance("loewner_heinz", 99, trial, params);
    const CheckOutcome out = run_check("loewner_heinz", inst, 1e-9);
    CHECK(out.verdict);
    REQUIRE(out.margins.size() == 2);
    CHECK(out.margins[0] >= -1e-9);  // min eigenvalue of A^p - B^p
    CHECK(out.margins[1] >= -1e-9);  // log-convexity route
  }
}

TEST_CASE("near-singular profile at p = 1 collapses both sandwich routes exactly") {
  RandomStream rs(128);
  Instance inst;
  inst.gen_id = "striking";
  inst.n = 3;
  inst.m = 3;
  inst.parts["A"] = {gen_psd(rs, 3, SpectrumProfile::NearSingular).matrix(), PartKind::Psd};
  inst.parts["B"] = {gen_psd(rs, 3, SpectrumProfile::NearSingular).matrix(), PartKind::Psd};
  inst.parts["Z"] = {gen_contraction(rs, 3), PartKind::Contraction};
  inst.scalars["p"] = 1.0;
  inst.scalars["tol_hint"] = 1e-8;
  const CheckOutcome out = run_check("striking", inst, 1e-9);
  CHECK(out.verdict);
  for (double m : out.margins) CHECK(m == 0.0);  // p = 1 is the same expression bit for bit
}

TEST_CASE("run_suite: grouping, determinism, and empty trials") {
  SweepParams params;
  params.dims = {2, 3};
  const auto once = run_suite("exp-family", params, 3, 5, 1e-9);
  const auto again = run_suite("exp-family", params, 3, 5, 1e-9);
  REQUIRE(once.size() == again.size());
  CHECK(once.size() == suite_checks("exp-family").size() * 3);
  for (size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].margin == again[i].margin);  // bitwise
    CHECK(to_json(once[i]).dump() == to_json(again[i]).dump());
  }
  CHECK(run_suite("araki-family", params, 0, 5, 1e-9).empty());
  // "all" covers the registry
  CHECK(suite_checks("all").size() == registry().size());
}
