#include "jla/matrix.hpp"

#include "jla/error.hpp"

namespace jla {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!is_zero(o.e_[i])) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!is_zero(o.e_[i])) e_[i] -= o.e_[i];
  return *this;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(*this);
  r += o;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r(*this);
  r -= o;
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!is_zero(e_[i])) r.e_[i] = -e_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in *");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (!is_zero(b)) r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix& Matrix::add_scaled(const Rational& s, const Matrix& m) {
  if (rows_ != m.rows_ || cols_ != m.cols_)
    throw DimensionError("matrix shape mismatch in add_scaled");
  if (is_zero(s)) return *this;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!is_zero(m.e_[i])) e_[i] += s * m.e_[i];
  return *this;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!jla::is_zero(x)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vec& flat) {
  if (flat.size() != rows * cols)
    throw DimensionError("flattened length does not match shape");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < flat.size(); ++i) m.e_[i] = flat[i];
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  r.add_scaled(s, m);
  return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw DimensionError("matvec shape mismatch");
  Vec r = zero_vec(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& a = m.at(i, j);
      if (!is_zero(a) && !is_zero(v[j])) r[i] += a * v[j];
    }
  return r;
}

Matrix commutator(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
    throw DimensionError("commutator needs square matrices of equal size");
  return x * y - y * x;
}

}  // namespace jla
