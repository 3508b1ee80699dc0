#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "majorlab/major.hpp"
#include "majorlab/suites.hpp"

using namespace majorlab;

namespace {

// independent closed-form oracle for 2x2 Hermitian spectra
std::pair<double, double> eigen2x2(double a, Complex b, double c) {
  const double mean = 0.5 * (a + c);
  const double disc = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
  return {mean + disc, mean - disc};
}

PsdMatrix diag_psd(std::vector<double> d) { return PsdMatrix(ComplexMatrix::diagonal(d)); }

}  // namespace

TEST_CASE("weak_log_majorize: reflexive and diagonal cases") {
  const PsdMatrix x = diag_psd({3, 1});
  const auto self = weak_log_majorize(x, x, 1e-9);
  CHECK(self.verdict);
  for (double m : self.k_margins) CHECK(m == 0.0);
  CHECK(log_majorize(x, x, 1e-9).verdict);

  CHECK(weak_log_majorize(diag_psd({3, 1}), diag_psd({4, 2}), 1e-9).verdict);
  const auto fail = weak_log_majorize(diag_psd({1, 1}), diag_psd({2, 0.4}), 1e-9);
  CHECK_FALSE(fail.verdict);
  CHECK(fail.k_margins[0] > 0);   // 1 <= 2
  CHECK(fail.k_margins[1] < 0);   // 1 > 0.8
}

TEST_CASE("log_majorize: needs determinant equality") {
  const auto weak_only = log_majorize(diag_psd({1, 1}), diag_psd({2, 2}), 1e-9);
  CHECK_FALSE(weak_only.verdict);
  CHECK(weak_log_majorize(diag_psd({1, 1}), diag_psd({2, 2}), 1e-9).verdict);

  RandomStream rs(71);
  const PsdMatrix x = gen_psd(rs, 3, SpectrumProfile::WellConditioned);
  const ComplexMatrix u = gen_unitary(rs, 3);
  const PsdMatrix y = make_psd(u * (x.matrix() * u.adjoint()));
  CHECK(log_majorize(x, y, 1e-8).verdict);  // equal spectra
}

TEST_CASE("log_majorize: hand-built Araki instance with the 2x2 oracle") {
  // A = diag(1,2), B = [[2,1],[1,1]]: ABA = [[2,2],[2,4]], A^2 B^2 A^2 = [[5,12],[12,32]]
  const ComplexMatrix aba{{Complex{2, 0}, Complex{2, 0}}, {Complex{2, 0}, Complex{4, 0}}};
  const PsdMatrix x = psd_power(make_psd(aba), 2.0);
  const ComplexMatrix y_m{{Complex{5, 0}, Complex{12, 0}}, {Complex{12, 0}, Complex{32, 0}}};
  const PsdMatrix y = make_psd(y_m);

  const auto [lx1, lx2] = eigen2x2(8, Complex{12, 0}, 20);  // (ABA)^2 = [[8,12],[12,20]]
  const auto [ly1, ly2] = eigen2x2(5, Complex{12, 0}, 32);
  CHECK(x.eigenvalues()[0] == doctest::Approx(lx1).epsilon(1e-10));
  CHECK(y.eigenvalues()[0] == doctest::Approx(ly1).epsilon(1e-10));
  CHECK(lx1 * lx2 == doctest::Approx(ly1 * ly2).epsilon(1e-10));  // det equality: both 16

  const auto rep = log_majorize(x, y, 1e-9);
  CHECK(rep.verdict);
  CHECK(rep.k_margins[0] == doctest::Approx(std::log(ly1 / lx1)).epsilon(1e-9));
  CHECK(std::abs(rep.margin_n()) <= 1e-9);
}

TEST_CASE("super_weak_log_majorize: diagonal cases and the expansive Araki form") {
  CHECK(super_weak_log_majorize(diag_psd({2, 3}), diag_psd({2, 3}), 1e-9).verdict);

  // nu-products X: 2,6 vs Y: 1,10 -> k=1 holds, k=2 fails
  const auto rep = super_weak_log_majorize(diag_psd({2, 3}), diag_psd({1, 10}), 1e-9);
  CHECK_FALSE(rep.verdict);
  CHECK(rep.k_margins[0] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(rep.k_margins[1] < 0);

  // expansive Z = 2I turns the sandwich into a scaled Araki pair
  RandomStream rs(72);
  for (int trial = 0; trial < 5; ++trial) {
    const PsdMatrix a = gen_psd(rs, 3, SpectrumProfile::WellConditioned);
    const PsdMatrix b = gen_psd(rs, 3, SpectrumProfile::WellConditioned);
    const ComplexMatrix z = 2.0 * ComplexMatrix::identity(3);
    const double p = 2.0;
    const PsdMatrix x =
        psd_power(make_psd(a.matrix() * (z.adjoint() * (b.matrix() * (z * a.matrix())))), p);
    const PsdMatrix y =
        make_psd(psd_power(a, p).matrix() *
                 (z.adjoint() * (psd_power(b, p).matrix() * (z * psd_power(a, p).matrix()))));
    CHECK(super_weak_log_majorize(x, y, 1e-8).verdict);
  }
}

TEST_CASE("zero eigenvalues: rank mismatches swing by the floored log scale") {
  // Y loses rank that X keeps: the product comparison collapses at k = n to
  // roughly k log(floor) -- finite, unambiguous, very negative
  const auto bad = weak_log_majorize(diag_psd({2, 1}), diag_psd({3, 0}), 1e-9);
  CHECK_FALSE(bad.verdict);
  CHECK(bad.k_margins[1] < -20.0);

  // X vanishing first is trivially fine
  const auto ok = weak_log_majorize(diag_psd({2, 0}), diag_psd({3, 1}), 1e-9);
  CHECK(ok.verdict);
  CHECK(ok.k_margins[1] > 20.0);

  // matched zero counts mean both products vanish: margin 0, det equality holds
  const auto matched = log_majorize(diag_psd({2, 0}), diag_psd({2, 0}), 1e-9);
  CHECK(matched.verdict);
  CHECK(matched.k_margins[1] == 0.0);
}

TEST_CASE("duality on invertible pairs: inverses respect the relations") {
  // with determinant equality, inversion preserves log-majorization; without
  // it, inversion exchanges the weak and super relations
  RandomStream rs(73);
  for (uint64_t trial = 0; trial < 10; ++trial) {
    SweepParams params;
    params.dims = {3};
    const Instance inst = gen_instance("araki", 500, trial, params);
    const PsdMatrix a(inst.part("A").value);
    const PsdMatrix b(inst.part("B").value);
    if (a.rank() < a.dim() || b.rank() < b.dim()) continue;
    const double p = inst.scalar("p");
    const PsdMatrix x = psd_power(make_psd(a.matrix() * (b.matrix() * a.matrix())), p);
    const PsdMatrix y = make_psd(psd_power(a, p).matrix() *
                                 (psd_power(b, p).matrix() * psd_power(a, p).matrix()));
    REQUIRE(log_majorize(x, y, 1e-7).verdict);
    CHECK(log_majorize(psd_power(x, -1.0), psd_power(y, -1.0), 1e-7).verdict);
    CHECK(super_weak_log_majorize(psd_power(x, -1.0), psd_power(y, -1.0), 1e-7).verdict);
  }

  // weak <-> super exchange on generic invertible pairs
  for (int trial = 0; trial < 10; ++trial) {
    const PsdMatrix x = gen_psd(rs, 3, SpectrumProfile::WellConditioned);
    PsdMatrix y = make_psd(1.3 * (x.matrix() +
                                  gen_psd(rs, 3, SpectrumProfile::WellConditioned).matrix()));
    REQUIRE(weak_log_majorize(x, y, 1e-9).verdict);
    CHECK(super_weak_log_majorize(psd_power(x, -1.0), psd_power(y, -1.0), 1e-8).verdict);
  }
}

TEST_CASE("transitivity of weak log-majorization") {
  RandomStream rs(74);
  for (int trial = 0; trial < 10; ++trial) {
    const PsdMatrix x = gen_psd(rs, 4, SpectrumProfile::WellConditioned);
    std::vector<double> mid = x.eigenvalues();
    std::vector<double> top = x.eigenvalues();
    for (size_t i = 0; i < mid.size(); ++i) {
      mid[i] *= rs.uniform(1.0, 1.5);
      top[i] = mid[i] * rs.uniform(1.0, 1.5);
    }
    const PsdMatrix y = PsdMatrix::from_spectrum(mid, gen_unitary(rs, 4));
    const PsdMatrix w = PsdMatrix::from_spectrum(top, gen_unitary(rs, 4));
    const double tol = 1e-9;
    REQUIRE(weak_log_majorize(x, y, tol).verdict);
    REQUIRE(weak_log_majorize(y, w, tol).verdict);
    CHECK(weak_log_majorize(x, w, 2 * tol).verdict);
  }
}

TEST_CASE("eigen-log and compound-norm margin routes agree") {
  RandomStream rs(75);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 4;  // up to 5
    PsdMatrix x = gen_psd(rs, n, SpectrumProfile::WellConditioned);
    PsdMatrix y = gen_psd(rs, n, SpectrumProfile::WellConditioned);
    if (trial % 3 == 0) y = make_psd(1.2 * (x.matrix() + y.matrix()));  // force a true verdict
    const auto eigen_route = weak_log_majorize(x, y, 1e-9);
    const auto compound_route = weak_log_margins_compound(x, y);
    bool compound_verdict = true;
    for (double m : compound_route)
      if (m < -1e-9) compound_verdict = false;
    CHECK(eigen_route.verdict == compound_verdict);
    for (int k = 0; k < n; ++k)
      CHECK(eigen_route.k_margins[k] ==
            doctest::Approx(compound_route[k]).epsilon(1e-7).scale(
                std::max(1.0, std::abs(eigen_route.k_margins[k]))));
  }
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(weak_log_majorize(diag_psd({1}), diag_psd({1, 2}), 1e-9), DimMismatch);
  CHECK_THROWS_AS(super_weak_log_majorize(diag_psd({1}), diag_psd({1, 2}), 1e-9), DimMismatch);
}
