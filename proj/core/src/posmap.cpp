#include "majorlab/posmap.hpp"

#include <cmath>

namespace majorlab {

KrausMap::KrausMap(int in_dim, int out_dim, std::vector<ComplexMatrix> kraus)
    : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw BadDomain("KrausMap: empty Kraus list");
  for (const auto& z : kraus_) {
    if (z.rows() != in_dim_ || z.cols() != out_dim_)
      throw DimMismatch("KrausMap: Kraus term shape mismatch");
    require_finite(z, "KrausMap");
  }
  gram_ = ComplexMatrix(out_dim_, out_dim_);
  for (const auto& z : kraus_) gram_ += z.adjoint() * z;
  gram_ = hermitian_part(gram_);
  EigenSystem es = hermitian_eigen(gram_);
  const double top = es.values.empty() ? 0.0 : es.values.front();
  sub_unital_ = top <= 1.0 + 1e-9;
  unital_ = (gram_ - ComplexMatrix::identity(out_dim_)).max_abs() <= 1e-9;
}

ComplexMatrix KrausMap::apply(const ComplexMatrix& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_)
    throw DimMismatch("KrausMap::apply: input must match in_dim");
  ComplexMatrix out(out_dim_, out_dim_);
  for (const auto& z : kraus_) out += z.adjoint() * (x * z);
  return out;
}

KrausMap schur_multiplier(const PsdMatrix& c) {
  const int n = c.dim();
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < n; ++i) {
    const double lam = c.eigenvalues()[i];
    if (lam <= 0.0) continue;
    const double root = std::sqrt(lam);
    ComplexMatrix d(n, n);
    // diag of the conjugated scaled eigenvector, so that the map multiplies
    // entrywise by C rather than by its conjugate
    for (int j = 0; j < n; ++j) d(j, j) = root * std::conj(c.spectrum().vectors(j, i));
    kraus.push_back(std::move(d));
  }
  if (kraus.empty()) kraus.push_back(ComplexMatrix(n, n));  // C = 0: the zero map
  return KrausMap(n, n, std::move(kraus));
}

KrausMap block_average(int m, int n) {
  if (m < 1 || n < 1) throw BadDomain("block_average: dimensions must be positive");
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<ComplexMatrix> kraus;
  for (int k = 0; k < m; ++k) {
    ComplexMatrix z(m * n, n);
    for (int j = 0; j < n; ++j) z(k * n + j, j) = w;
    kraus.push_back(std::move(z));
  }
  return KrausMap(m * n, n, std::move(kraus));
}

KrausMap block_full_average(int m, int n) {
  if (m < 1 || n < 1) throw BadDomain("block_full_average: dimensions must be positive");
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  ComplexMatrix z(m * n, n);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < n; ++j) z(k * n + j, j) = w;
  return KrausMap(m * n, n, {std::move(z)});
}

Dilation dilate(const KrausMap& map, const PsdMatrix& a, const PsdMatrix& b) {
  if (!map.sub_unital()) throw NotSubUnital("dilate: map is not sub-unital");
  if (map.in_dim() != map.out_dim()) throw DimMismatch("dilate: square Kraus terms required");
  const int n = map.in_dim();
  if (a.dim() != n || b.dim() != n) throw DimMismatch("dilate: operand dimension mismatch");
  const int m = static_cast<int>(map.kraus().size());
  const int big = m * n;

  Dilation d;
  d.a_tilde = ComplexMatrix(big, big);
  d.b_tilde = ComplexMatrix(big, big);
  d.z_tilde = ComplexMatrix(big, big);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d.a_tilde(i, j) = a.matrix()(i, j);
      for (int k = 0; k < m; ++k) {
        d.b_tilde(k * n + i, k * n + j) = b.matrix()(i, j);
        d.z_tilde(k * n + i, j) = map.kraus()[k](i, j);
      }
    }
  return d;
}

KrausMap kraus_on_commutative(const std::vector<SpectralImage>& data) {
  const int m = static_cast<int>(data.size());
  return kraus_on_commutative(data, ComplexMatrix::identity(m));
}

KrausMap kraus_on_commutative(const std::vector<SpectralImage>& data,
                              const ComplexMatrix& eigenvectors) {
  if (data.empty()) throw BadDomain("kraus_on_commutative: empty spectral data");
  const int m = eigenvectors.rows();
  const int n = data.front().image.dim();
  if (eigenvectors.cols() != static_cast<int>(data.size()))
    throw DimMismatch("kraus_on_commutative: one eigenvector column per eigenvalue required");

  std::vector<ComplexMatrix> kraus;
  for (size_t i = 0; i < data.size(); ++i) {
    if (data[i].image.dim() != n) throw DimMismatch("kraus_on_commutative: image dim mismatch");
    const PsdMatrix root = psd_power(PsdMatrix(data[i].image), 0.5);
    for (int j = 0; j < n; ++j) {
      ComplexMatrix z(m, n);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
          z(r, c) = eigenvectors(r, static_cast<int>(i)) * root.matrix()(j, c);
      kraus.push_back(std::move(z));
    }
  }
  return KrausMap(m, n, std::move(kraus));
}

}  // namespace majorlab
