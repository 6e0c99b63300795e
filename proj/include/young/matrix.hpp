#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "young/errors.hpp"

namespace young {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Relative/absolute tolerance pair used by every numerical predicate.
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;

  double scaled(double reference) const {
    return relative * std::abs(reference) + absolute;
  }
};

/// Dense row-major complex matrix; the finite model of a compact operator.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(check_shape(rows, cols), Complex{}) {}

  ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != check_shape(rows, cols)) {
      throw DimensionMismatch("entry count does not match rows*cols");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  bool all_finite() const {
    for (const Complex& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

 private:
  static size_t check_shape(int rows, int cols) {
    if (rows <= 0 || cols <= 0) {
      throw BadDimension("matrix dimensions must be positive");
    }
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

inline ComplexMatrix zeros(int rows, int cols) { return ComplexMatrix(rows, cols); }

inline ComplexMatrix identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

inline ComplexMatrix diag(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = values[i];
  return m;
}

inline ComplexMatrix diag_complex(const std::vector<Complex>& values) {
  const int n = static_cast<int>(values.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = values[i];
  return m;
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix a(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) a(j, i) = std::conj(m(i, j));
  }
  return a;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix addition: shape mismatch");
  }
  ComplexMatrix c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix subtraction: shape mismatch");
  }
  ComplexMatrix c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product: inner dimensions differ");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
  ComplexMatrix c = m;
  for (Complex& z : c.data()) z *= scalar;
  return c;
}

inline ComplexMatrix operator*(double scalar, const ComplexMatrix& m) {
  return Complex(scalar, 0.0) * m;
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

inline Complex trace(const ComplexMatrix& m) {
  if (!m.square()) throw NotSquare("trace of a non-square matrix");
  Complex t{};
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

inline double hermitian_defect(const ComplexMatrix& m) {
  if (!m.square()) throw NotSquare("hermitian defect of a non-square matrix");
  double sum = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      sum += std::norm(m(i, j) - std::conj(m(j, i)));
    }
  }
  return std::sqrt(sum);
}

inline bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol = {}) {
  return m.square() && hermitian_defect(m) <= tol.scaled(frobenius_norm(m));
}

/// (m + m*)/2, killing anti-Hermitian rounding noise.
inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  if (!m.square()) throw NotSquare("hermitian part of a non-square matrix");
  ComplexMatrix h(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  return h;
}

inline ComplexVector column(const ComplexMatrix& m, int j) {
  ComplexVector v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

inline void set_column(ComplexMatrix& m, int j, const ComplexVector& v) {
  for (int i = 0; i < m.rows(); ++i) m(i, j) = v[i];
}

/// u v* as a rows(u) x rows(v) matrix.
inline ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v) {
  ComplexMatrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (size_t i = 0; i < u.size(); ++i) {
    for (size_t j = 0; j < v.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = u[i] * std::conj(v[j]);
  }
  return m;
}

inline ComplexVector mat_vec(const ComplexMatrix& m, const ComplexVector& v) {
  if (static_cast<size_t>(m.cols()) != v.size()) {
    throw DimensionMismatch("matrix-vector product: shape mismatch");
  }
  ComplexVector y(m.rows(), Complex{});
  for (int i = 0; i < m.rows(); ++i) {
    Complex s{};
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    y[i] = s;
  }
  return y;
}

/// Conjugate-linear in the first argument: inner(a, b) = a* b.
inline Complex inner(const ComplexVector& a, const ComplexVector& b) {
  Complex s{};
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double vec_norm(const ComplexVector& v) {
  double sum = 0.0;
  for (const Complex& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace young
