#pragma once

#include <cstddef>
#include <vector>

#include "jla/rational.hpp"

namespace jla {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  /// Builds from integer rows (test and table convenience).
  static Matrix from_int_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  const std::vector<Rational>& entries() const { return e_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// acc += s * m, skipping zero scalars and zero entries.
  Matrix& add_scaled(const Rational& s, const Matrix& m);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix transpose() const;

  /// Row-major flattening into a coordinate vector of length rows*cols.
  Vec flatten() const { return e_; }
  static Matrix unflatten(std::size_t rows, std::size_t cols, const Vec& flat);

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

Matrix operator*(const Rational& s, const Matrix& m);
Vec operator*(const Matrix& m, const Vec& v);

/// xy - yx; both operands square of the same size.
Matrix commutator(const Matrix& x, const Matrix& y);

}  // namespace jla
