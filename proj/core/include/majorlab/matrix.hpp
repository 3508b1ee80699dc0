#ifndef MAJORLAB_MATRIX_HPP
#define MAJORLAB_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <vector>

#include "majorlab/errors.hpp"

namespace majorlab {

using Complex = std::complex<double>;

// Dense complex matrix, value semantics, row-major storage.
// Rectangular shapes are allowed (Kraus operators, stacked blocks); the
// spectral routines require square input and say so.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::vector<Complex> data);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int dim() const;  // rows(); throws DimMismatch when not square

  Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  double max_abs() const;  // entrywise max modulus
  double frobenius_norm() const;
  bool all_finite() const;
  bool is_hermitian(double tol) const;  // max |H - H*| entrywise <= tol

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);
  ComplexMatrix& operator*=(double s);

  // Entrywise equality within an explicit absolute tolerance.
  static bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);

// (M + M*)/2; requires square.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Stack blocks vertically: all blocks share a column count.
ComplexMatrix vstack(const std::vector<ComplexMatrix>& blocks);

// Throws BadDomain if any entry is NaN/Inf.
void require_finite(const ComplexMatrix& m, const char* who);

}  // namespace majorlab

#endif
