#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "majorlab/posmap.hpp"
#include "majorlab/suites.hpp"

using namespace majorlab;

TEST_CASE("apply: identity map, pinching, and single congruence") {
  RandomStream rs(51);
  const int n = 3;
  const ComplexMatrix x = gen_general(rs, n);

  const KrausMap ident(n, n, {ComplexMatrix::identity(n)});
  CHECK(ident.unital());
  CHECK((ident.apply(x) - x).max_abs() <= 1e-14);

  // basis projections give the diagonal pinching X -> I o X
  std::vector<ComplexMatrix> projections;
  for (int i = 0; i < n; ++i) {
    ComplexMatrix e(n, n);
    e(i, i) = 1.0;
    projections.push_back(e);
  }
  const KrausMap pinch(n, n, projections);
  CHECK(pinch.unital());
  const ComplexMatrix pinched = pinch.apply(x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        CHECK(std::abs(pinched(i, i) - x(i, i)) <= 1e-14);
      else
        CHECK(std::abs(pinched(i, j)) <= 1e-14);
    }

  const ComplexMatrix z = gen_contraction(rs, n);
  const KrausMap congruence(n, n, {z});
  CHECK(congruence.sub_unital());
  CHECK((congruence.apply(x) - z.adjoint() * (x * z)).max_abs() <= 1e-13);
}

TEST_CASE("apply: dimension mismatch is rejected") {
  const KrausMap ident(2, 2, {ComplexMatrix::identity(2)});
  CHECK_THROWS_AS(ident.apply(ComplexMatrix::identity(3)), DimMismatch);
}

TEST_CASE("apply preserves positive semidefiniteness") {
  RandomStream rs(52);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 4;
    const int m = n + trial % 2;
    const KrausMap map = gen_subunital_map(rs, m, n, 2 + trial % 2);
    const PsdMatrix x = gen_psd(rs, m, SpectrumProfile::WellConditioned);
    const EigenSystem es = hermitian_eigen(hermitian_part(map.apply(x.matrix())));
    CHECK(es.values.back() >= -1e-9);
  }
}

TEST_CASE("schur_multiplier: all-ones mask is the identity, I is the pinching") {
  const int n = 3;
  ComplexMatrix ones(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ones(i, j) = 1.0;
  const KrausMap jmap = schur_multiplier(PsdMatrix(ones));
  CHECK(jmap.unital());
  RandomStream rs(53);
  const ComplexMatrix x = gen_general(rs, n);
  CHECK((jmap.apply(x) - x).max_abs() <= 1e-10);

  const KrausMap pinch = schur_multiplier(PsdMatrix(ComplexMatrix::identity(n)));
  const ComplexMatrix px = pinch.apply(x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(px(i, j) - (i == j ? x(i, j) : Complex{0, 0})) <= 1e-12);
}

TEST_CASE("schur_multiplier: correlation mask acts entrywise") {
  const double rho = 0.6;
  ComplexMatrix c(2, 2);
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  c(0, 1) = rho;
  c(1, 0) = rho;
  const KrausMap map = schur_multiplier(PsdMatrix(c));
  CHECK(map.sub_unital());
  RandomStream rs(54);
  ComplexMatrix x = hermitian_part(gen_general(rs, 2));
  const ComplexMatrix y = map.apply(x);
  CHECK(std::abs(y(0, 0) - x(0, 0)) <= 1e-12);
  CHECK(std::abs(y(1, 1) - x(1, 1)) <= 1e-12);
  CHECK(std::abs(y(0, 1) - rho * x(0, 1)) <= 1e-12);
  CHECK(std::abs(y(1, 0) - rho * x(1, 0)) <= 1e-12);
}

TEST_CASE("schur_multiplier: apply equals the entrywise product on random data") {
  RandomStream rs(55);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 4;
    const PsdMatrix c = gen_psd(rs, n, SpectrumProfile::WellConditioned);
    const KrausMap map = schur_multiplier(c);
    const ComplexMatrix x = gen_general(rs, n);
    CHECK((map.apply(x) - schur_product(c.matrix(), x)).max_abs() <= 1e-10);
  }
}

TEST_CASE("block_average: identity at m=1 and mean of diagonal blocks") {
  RandomStream rs(56);
  const int n = 2;
  const KrausMap one = block_average(1, n);
  const ComplexMatrix x = gen_general(rs, n);
  CHECK((one.apply(x) - x).max_abs() <= 1e-14);

  const ComplexMatrix x1 = gen_general(rs, n);
  const ComplexMatrix x2 = gen_general(rs, n);
  const KrausMap avg = block_average(2, n);
  CHECK(avg.unital());
  const ComplexMatrix mean = avg.apply(direct_sum({x1, x2}));
  CHECK((mean - 0.5 * (x1 + x2)).max_abs() <= 1e-13);
}

TEST_CASE("block_full_average: the 2x2-block mean with 1/2 normalization") {
  RandomStream rs(57);
  const int n = 2;
  const ComplexMatrix b = gen_general(rs, n), c = gen_general(rs, n);
  const ComplexMatrix d = gen_general(rs, n), e = gen_general(rs, n);
  ComplexMatrix big(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      big(i, j) = b(i, j);
      big(i, n + j) = c(i, j);
      big(n + i, j) = d(i, j);
      big(n + i, n + j) = e(i, j);
    }
  const KrausMap map = block_full_average(2, n);
  CHECK(map.unital());
  CHECK((map.apply(big) - 0.5 * (b + c + d + e)).max_abs() <= 1e-13);
}

TEST_CASE("dilate: block structure and contraction bound") {
  RandomStream rs(58);
  const int n = 3;
  const KrausMap map = gen_subunital_map(rs, n, n, 3);
  const PsdMatrix a = gen_psd(rs, n, SpectrumProfile::WellConditioned);
  const PsdMatrix b = gen_psd(rs, n, SpectrumProfile::WellConditioned);
  const Dilation dil = dilate(map, a, b);

  CHECK(operator_norm(dil.z_tilde) <= 1.0 + 1e-10);

  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    const PsdMatrix big_b = make_psd(dil.b_tilde);
    const ComplexMatrix big =
        dil.a_tilde * (dil.z_tilde.adjoint() * (psd_power(big_b, p).matrix() *
                                                (dil.z_tilde * dil.a_tilde)));
    const ComplexMatrix expected =
        a.matrix() * (map.apply(psd_power(b, p).matrix()) * a.matrix());
    ComplexMatrix first_block(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) first_block(i, j) = big(i, j);
    CHECK((first_block - expected).max_abs() <= 1e-9 * std::max(1.0, expected.max_abs()));
  }

  // single-term maps dilate to themselves
  const ComplexMatrix z = gen_contraction(rs, n);
  const Dilation single = dilate(KrausMap(n, n, {z}), a, b);
  CHECK((single.z_tilde - z).max_abs() <= 1e-14);
  CHECK((single.a_tilde - a.matrix()).max_abs() <= 1e-14);
  CHECK((single.b_tilde - b.matrix()).max_abs() <= 1e-14);
}

TEST_CASE("dilate: rejects non-sub-unital maps") {
  RandomStream rs(59);
  const int n = 2;
  const ComplexMatrix z = 2.0 * ComplexMatrix::identity(n);
  const PsdMatrix a = gen_psd(rs, n, SpectrumProfile::WellConditioned);
  CHECK_THROWS_AS(dilate(KrausMap(n, n, {z}), a, a), NotSubUnital);
}

TEST_CASE("kraus_on_commutative: reproduces the map on powers of A") {
  RandomStream rs(60);
  const int m = 3, n = 3;
  // a positive map given only on the spectral projections of a diagonal A
  std::vector<double> lambdas = {2.0, 1.0, 0.5};
  std::vector<SpectralImage> data;
  for (int i = 0; i < m; ++i)
    data.push_back({lambdas[i], gen_psd(rs, n, SpectrumProfile::WellConditioned).matrix()});
  const KrausMap map = kraus_on_commutative(data);

  for (double t : {0.5, 1.0, 2.0, 3.0}) {
    std::vector<double> powered(m);
    for (int i = 0; i < m; ++i) powered[i] = std::pow(lambdas[i], t);
    const ComplexMatrix at = ComplexMatrix::diagonal(powered);
    ComplexMatrix expected(n, n);
    for (int i = 0; i < m; ++i) expected += powered[i] * data[i].image;
    CHECK((map.apply(at) - expected).max_abs() <= 1e-8 * std::max(1.0, expected.max_abs()));
  }
}

TEST_CASE("kraus_on_commutative: trace map and scalar A") {
  RandomStream rs(61);
  const int m = 2, n = 2;
  // Phi(X) = Tr(X) rho realized through its spectral images rho, rho
  const PsdMatrix rho = gen_psd(rs, n, SpectrumProfile::WellConditioned);
  std::vector<SpectralImage> data = {{1.7, rho.matrix()}, {0.4, rho.matrix()}};
  const KrausMap map = kraus_on_commutative(data);
  for (double t : {1.0, 2.0}) {
    const double a1 = std::pow(1.7, t), a2 = std::pow(0.4, t);
    const ComplexMatrix at = ComplexMatrix::diagonal(std::vector<double>{a1, a2});
    const ComplexMatrix expected = (a1 + a2) * rho.matrix();
    CHECK((map.apply(at) - expected).max_abs() <= 1e-8 * std::max(1.0, expected.max_abs()));
  }

  // single eigenvalue: A = lambda I, apply(A^t) = lambda^t Phi(I)
  std::vector<SpectralImage> single = {{1.3, rho.matrix()}};
  const KrausMap mono = kraus_on_commutative(single);
  const ComplexMatrix at = ComplexMatrix::diagonal(std::vector<double>{std::pow(1.3, 2.0)});
  CHECK((mono.apply(at) - std::pow(1.3, 2.0) * rho.matrix()).max_abs() <= 1e-9);
}

TEST_CASE("kraus_on_commutative: general eigenbasis") {
  RandomStream rs(62);
  const int m = 3, n = 2;
  const ComplexMatrix q = gen_unitary(rs, m);
  std::vector<double> lambdas = {1.5, 0.8, 0.3};
  std::vector<SpectralImage> data;
  for (int i = 0; i < m; ++i)
    data.push_back({lambdas[i], gen_psd(rs, n, SpectrumProfile::WellConditioned).matrix()});
  const KrausMap map = kraus_on_commutative(data, q);

  for (double t : {0.5, 2.0}) {
    std::vector<double> powered(m);
    for (int i = 0; i < m; ++i) powered[i] = std::pow(lambdas[i], t);
    const ComplexMatrix at = q * ComplexMatrix::diagonal(powered) * q.adjoint();
    ComplexMatrix expected(n, n);
    for (int i = 0; i < m; ++i) expected += powered[i] * data[i].image;
    CHECK((map.apply(hermitian_part(at)) - expected).max_abs() <=
          1e-8 * std::max(1.0, expected.max_abs()));
  }
}

TEST_CASE("gen_subunital_map flags and dilation norm bound") {
  RandomStream rs(63);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const KrausMap map = gen_subunital_map(rs, n, n, 2 + trial % 2);
    CHECK(map.sub_unital());
    const PsdMatrix a = gen_psd(rs, n, SpectrumProfile::WellConditioned);
    const Dilation dil = dilate(map, a, a);
    CHECK(operator_norm(dil.z_tilde) <= 1.0 + 1e-10);
  }
}
