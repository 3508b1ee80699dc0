#include "majorlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace majorlab {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  const int n = a.rows();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q). Returns the applied plane rotation to v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r < 1e-300) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase = apq / r;
  const Complex phase_conj = std::conj(phase);

  const int n = a.rows();
  // columns: [col_p col_q] <- [col_p col_q] * J
  for (int i = 0; i < n; ++i) {
    const Complex x = a(i, p);
    const Complex y = a(i, q);
    a(i, p) = c * x - s * phase_conj * y;
    a(i, q) = s * phase * x + c * y;
  }
  // rows: J* from the left
  for (int j = 0; j < n; ++j) {
    const Complex x = a(p, j);
    const Complex y = a(q, j);
    a(p, j) = c * x - s * phase * y;
    a(q, j) = s * phase_conj * x + c * y;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex{a(p, p).real(), 0.0};
  a(q, q) = Complex{a(q, q).real(), 0.0};
  for (int i = 0; i < n; ++i) {
    const Complex x = v(i, p);
    const Complex y = v(i, q);
    v(i, p) = c * x - s * phase_conj * y;
    v(i, q) = s * phase * x + c * y;
  }
}

std::vector<int> sort_descending(std::vector<double>& values) {
  std::vector<int> perm(values.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int i, int j) { return values[i] > values[j]; });
  std::vector<double> sorted(values.size());
  for (size_t i = 0; i < perm.size(); ++i) sorted[i] = values[perm[i]];
  values = std::move(sorted);
  return perm;
}

ComplexMatrix permute_columns(const ComplexMatrix& m, const std::vector<int>& perm) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) out(i, j) = m(i, perm[j]);
  return out;
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& h) {
  require_finite(h, "hermitian_eigen");
  const int n = h.dim();
  const double scale = std::max(1.0, h.max_abs());
  if (!h.is_hermitian(1e-12 * scale)) throw NotHermitian("hermitian_eigen: input not Hermitian");

  ComplexMatrix a = hermitian_part(h);  // kill roundoff asymmetry before iterating
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = 1e-14 * std::max(1e-300, a.frobenius_norm());
  const int max_sweeps = 30 * n * n;

  bool converged = n <= 1 || off_diagonal_norm(a) <= stop;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= stop;
  }
  if (!converged) throw NoConvergence("hermitian_eigen: sweep budget exhausted");

  EigenSystem es;
  es.values.resize(n);
  for (int i = 0; i < n; ++i) es.values[i] = a(i, i).real();
  const std::vector<int> perm = sort_descending(es.values);
  es.vectors = permute_columns(v, perm);
  return es;
}

SvdSystem svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  const int n = m.dim();
  EigenSystem es = hermitian_eigen(m.adjoint() * m);

  SvdSystem out;
  out.singulars.resize(n);
  // refine each value as ||M v_j||: the quadratic form loses half the digits
  // near zero, the image norm does not
  for (int j = 0; j < n; ++j) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < n; ++k) acc += m(i, k) * es.vectors(k, j);
      norm2 += std::norm(acc);
    }
    out.singulars[j] = std::sqrt(norm2);
  }
  // refinement can reorder within noise-equal clusters; re-sort pairs
  const std::vector<int> perm = sort_descending(out.singulars);
  out.right = permute_columns(es.vectors, perm);

  const double top = n > 0 ? out.singulars[0] : 0.0;
  const double cutoff = top * 1e-13;
  ComplexMatrix u(n, n);
  int rank = 0;
  while (rank < n && out.singulars[rank] > cutoff) ++rank;

  // range columns: u_j = M v_j / sigma_j, re-orthonormalized in order
  std::vector<std::vector<Complex>> cols;
  cols.reserve(n);
  for (int j = 0; j < rank; ++j) {
    std::vector<Complex> col(n, Complex{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < n; ++k) acc += m(i, k) * out.right(k, j);
      col[i] = acc / out.singulars[j];
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& prev : cols) {
        Complex proj{0.0, 0.0};
        for (int i = 0; i < n; ++i) proj += std::conj(prev[i]) * col[i];
        for (int i = 0; i < n; ++i) col[i] -= proj * prev[i];
      }
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(col[i]);
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) col[i] /= norm;
    cols.push_back(std::move(col));
  }

  // null-space completion: pick the standard basis vector with the largest
  // residual each time (deterministic incl. ties by lowest index)
  while (static_cast<int>(cols.size()) < n) {
    std::vector<Complex> best;
    double best_norm = -1.0;
    for (int cand = 0; cand < n; ++cand) {
      std::vector<Complex> col(n, Complex{0.0, 0.0});
      col[cand] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& prev : cols) {
          Complex proj{0.0, 0.0};
          for (int i = 0; i < n; ++i) proj += std::conj(prev[i]) * col[i];
          for (int i = 0; i < n; ++i) col[i] -= proj * prev[i];
        }
      }
      double norm = 0.0;
      for (int i = 0; i < n; ++i) norm += std::norm(col[i]);
      norm = std::sqrt(norm);
      if (norm > best_norm + 1e-15) {
        best_norm = norm;
        best = std::move(col);
      }
    }
    for (auto& z : best) z /= best_norm;
    cols.push_back(std::move(best));
  }

  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) u(i, j) = cols[j][i];
  out.left = std::move(u);
  return out;
}

ComplexMatrix expm_general(const ComplexMatrix& m) {
  require_finite(m, "expm");
  const int n = m.dim();

  int squarings = 0;
  double norm = m.frobenius_norm();
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  ComplexMatrix a = std::pow(0.5, squarings) * m;

  // Taylor order 20 via Horner; truncation well below double precision at |a| <= 1/2.
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  ComplexMatrix p = eye;
  for (int k = 20; k >= 1; --k) p = eye + (1.0 / k) * (a * p);
  for (int s = 0; s < squarings; ++s) p = p * p;
  return p;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  require_finite(m, "expm");
  const double scale = std::max(1.0, m.max_abs());
  if (m.is_square() && m.is_hermitian(1e-12 * scale)) {
    EigenSystem es = hermitian_eigen(m);
    const int n = m.dim();
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < n; ++k)
          acc += es.vectors(i, k) * std::exp(es.values[k]) * std::conj(es.vectors(j, k));
        out(i, j) = acc;
      }
    return hermitian_part(out);
  }
  return expm_general(m);
}

double spectral_radius(const ComplexMatrix& m) {
  require_finite(m, "spectral_radius");
  const int n = m.dim();
  if (n == 0) return 0.0;
  const double scale = std::max(1.0, m.max_abs());
  if (m.is_hermitian(1e-12 * scale)) {
    EigenSystem es = hermitian_eigen(m);
    double r = 0.0;
    for (double v : es.values) r = std::max(r, std::abs(v));
    return r;
  }

  const double fro = m.frobenius_norm();
  if (fro == 0.0) return 0.0;
  ComplexMatrix a = (1.0 / fro) * m;
  // rho(M) = ||M||_F * lim_k ||N^(2^k)||_F^(1/2^k) with N = M/||M||_F
  double acc = 0.0;
  double weight = 0.5;
  for (int k = 0; k < 60; ++k) {
    a = a * a;
    const double r = a.frobenius_norm();
    if (r == 0.0) return 0.0;  // nilpotent
    a *= 1.0 / r;
    acc += weight * std::log(r);
    weight *= 0.5;
  }
  return fro * std::exp(acc);
}

double operator_norm(const ComplexMatrix& m) {
  SvdSystem sv = svd(m);
  return sv.singulars.empty() ? 0.0 : sv.singulars[0];
}

Complex determinant(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  Complex det{1.0, 0.0};
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > best) {
        best = std::abs(a(i, col));
        pivot = i;
      }
    if (best == 0.0) return Complex{0.0, 0.0};
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int i = col + 1; i < n; ++i) {
      const Complex f = a(i, col) / a(col, col);
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace majorlab
