#include "majorlab/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace majorlab {

namespace {

ComplexMatrix rebuild(const EigenSystem& es) {
  const int n = es.vectors.rows();
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < n; ++k)
        acc += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
      out(i, j) = acc;
    }
  return hermitian_part(out);
}

void sort_spectrum(EigenSystem& es) {
  const int n = static_cast<int>(es.values.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int i, int j) { return es.values[i] > es.values[j]; });
  std::vector<double> values(n);
  ComplexMatrix vectors(n, n);
  for (int j = 0; j < n; ++j) {
    values[j] = es.values[perm[j]];
    for (int i = 0; i < n; ++i) vectors(i, j) = es.vectors(i, perm[j]);
  }
  es.values = std::move(values);
  es.vectors = std::move(vectors);
}

}  // namespace

PsdMatrix::PsdMatrix(const ComplexMatrix& h) {
  spectrum_ = hermitian_eigen(h);
  const double top = spectrum_.values.empty() ? 0.0 : spectrum_.values.front();
  const double band = 1e-10 * std::max(1.0, top);
  for (double& v : spectrum_.values) {
    if (v < -band) throw NotPsd("PsdMatrix: negative eigenvalue beyond clamping band");
    if (v <= band) v = 0.0;
  }
  matrix_ = hermitian_part(h);
}

PsdMatrix PsdMatrix::project(const ComplexMatrix& h) {
  PsdMatrix out;
  out.spectrum_ = hermitian_eigen(hermitian_part(h));
  const double top = out.spectrum_.values.empty() ? 0.0 : out.spectrum_.values.front();
  const double band = 1e-10 * std::max(1.0, top);
  for (double& v : out.spectrum_.values)
    if (v <= band) v = 0.0;
  out.matrix_ = rebuild(out.spectrum_);
  return out;
}

PsdMatrix PsdMatrix::from_spectrum(std::vector<double> values, ComplexMatrix vectors) {
  PsdMatrix out;
  out.spectrum_.values = std::move(values);
  out.spectrum_.vectors = std::move(vectors);
  sort_spectrum(out.spectrum_);
  out.matrix_ = rebuild(out.spectrum_);
  return out;
}

ComplexMatrix PsdMatrix::sorted_diagonal() const {
  return ComplexMatrix::diagonal(spectrum_.values);
}

int PsdMatrix::rank() const {
  int r = 0;
  for (double v : spectrum_.values)
    if (v > 0.0) ++r;
  return r;
}

PsdMatrix make_psd(const ComplexMatrix& m) { return PsdMatrix(hermitian_part(m)); }

NormalMatrix::NormalMatrix(const ComplexMatrix& n)
    : matrix_(n), abs_(abs_val(n)) {
  const ComplexMatrix comm = n.adjoint() * n - n * n.adjoint();
  const double opn = abs_.eigenvalues().empty() ? 0.0 : abs_.eigenvalues().front();
  if (comm.max_abs() > 1e-10 * std::max(1.0, opn * opn))
    throw NotNormal("NormalMatrix: commutator test failed");
  phase_ = polar(n).first;
}

PsdMatrix psd_power(const PsdMatrix& a, double t) {
  if (!std::isfinite(t)) throw BadDomain("psd_power: non-finite exponent");
  if (t == 1.0) return a;
  std::vector<double> powered(a.eigenvalues().size());
  for (size_t j = 0; j < powered.size(); ++j) {
    const double v = a.eigenvalues()[j];
    powered[j] = v > 0.0 ? std::pow(v, t) : 0.0;
  }
  return PsdMatrix::from_spectrum(std::move(powered), a.spectrum().vectors);
}

PsdMatrix abs_val(const ComplexMatrix& m) {
  SvdSystem sv = svd(m);
  return PsdMatrix::from_spectrum(sv.singulars, sv.right);
}

std::pair<ComplexMatrix, PsdMatrix> polar(const ComplexMatrix& m) {
  SvdSystem sv = svd(m);
  ComplexMatrix u = sv.left * sv.right.adjoint();
  return {std::move(u), PsdMatrix::from_spectrum(sv.singulars, sv.right)};
}

std::pair<ComplexMatrix, ComplexMatrix> cartesian(const ComplexMatrix& t) {
  const int n = t.dim();
  ComplexMatrix x(n, n), y(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex a = t(i, j);
      const Complex b = std::conj(t(j, i));
      x(i, j) = 0.5 * (a + b);
      y(i, j) = Complex{0.0, -0.5} * (a - b);
    }
  return {std::move(x), std::move(y)};
}

ComplexMatrix schur_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DimMismatch("schur_product: shape mismatch");
  ComplexMatrix out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) * y(i, j);
  return out;
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out(rows, cols);
  int r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      const Complex f = x(i, j);
      if (f == Complex{0.0, 0.0}) continue;
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l)
          out(i * y.rows() + k, j * y.cols() + l) = f * y(k, l);
    }
  return out;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

ComplexMatrix compound(const ComplexMatrix& m, int k) {
  const int n = m.dim();
  if (k < 1 || k > n) throw BadOrder("compound: order out of range");
  if (k == 1) return m;
  const auto subsets = k_subsets(n, k);
  const int c = static_cast<int>(subsets.size());
  ComplexMatrix out(c, c);
  ComplexMatrix minor(k, k);
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = m(subsets[a][i], subsets[b][j]);
      out(a, b) = determinant(minor);
    }
  return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, int p) {
  if (p < 0) throw BadDomain("matrix_power: negative exponent");
  ComplexMatrix result = ComplexMatrix::identity(m.dim());
  ComplexMatrix base = m;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return result;
}

}  // namespace majorlab
