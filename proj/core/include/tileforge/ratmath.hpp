#pragma once

// Exact integer/rational scalars, dense matrices over them, and the handful of
// exact linear-algebra routines the rest of the library is built on.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tileforge/errors.hpp"

namespace tileforge {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds n/d in lowest terms with a positive denominator. Throws on d == 0.
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Floor of an exact rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Dense row-major matrix. Value type; equality is entrywise.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const;
  std::vector<T> row(std::size_t r) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector dimension mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference dimension mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Returns the integer matrix if every entry of m is integral; throws otherwise.
IntMatrix to_integer(const RatMatrix& m);

Integer trace(const IntMatrix& m);
IntMatrix power(const IntMatrix& m, unsigned exponent);
RatMatrix power(const RatMatrix& m, unsigned exponent);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det(const RatMatrix& m);
Integer det(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);

/// Classical adjugate, so that m * adjugate(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Max absolute row sum.
Rational infinity_norm(const RatMatrix& m);

/// Monic integer polynomial, coefficients stored from degree 0 upward.
struct Polynomial {
  IntVector coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  Integer evaluate(const Integer& x) const;
  IntMatrix evaluate(const IntMatrix& m) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// det(xI - m) by the Faddeev-LeVerrier recurrence over exact rationals.
Polynomial char_poly(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice spanned by `generators`
/// (each of length `dim`): lower triangular, positive diagonal, and each
/// entry left of the diagonal reduced into [0, diagonal entry of its row).
/// Throws RankDeficientError when the generators do not span a rank-`dim` lattice.
IntMatrix hermite_normal_form(const std::vector<IntVector>& generators, std::size_t dim);

struct LinearSolution {
  RatVector particular;             // free variables set to zero
  std::vector<RatVector> kernel;    // one basis vector per free variable, in column order
};

/// Solves m x = b. Throws NoSolutionError on an inconsistent system.
LinearSolution solve_linear(const RatMatrix& m, const RatVector& b);

/// Rank over Q.
std::size_t rank(const RatMatrix& m);

}  // namespace tileforge
