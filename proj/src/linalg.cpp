#include "jla/linalg.hpp"

#include <algorithm>

#include "jla/error.hpp"

namespace jla {

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!is_zero(m.at(i, c))) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Rational inv_p = 1 / m.at(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (!is_zero(m.at(r, j))) m.at(r, j) *= inv_p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m.at(r, j))) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

std::optional<Vec> solve(const Matrix& coeffs, const Vec& rhs) {
  if (coeffs.rows() != rhs.size())
    throw DimensionError("solve: rhs length does not match row count");
  const std::size_t n = coeffs.cols();
  Matrix aug(coeffs.rows(), n + 1);
  for (std::size_t i = 0; i < coeffs.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = coeffs.at(i, j);
    aug.at(i, n) = rhs[i];
  }
  RrefResult rr = rref(std::move(aug));
  Vec x = zero_vec(n);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    std::size_t p = rr.pivot_cols[r];
    if (p == n) return std::nullopt;  // pivot in rhs column: inconsistent
    x[p] = rr.mat.at(r, n);
  }
  return x;
}

std::vector<Vec> nullspace(const Matrix& m) {
  const std::size_t n = m.cols();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.mat.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(std::move(aug));
  if (rr.rank < n || rr.pivot_cols[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
  return inv;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(ambient_dim);
  for (const Vec& v : vectors) {
    if (v.size() != ambient_dim)
      throw DimensionError("span: vector length does not match ambient dimension");
    s.grow(v);
  }
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_)
    throw DimensionError("contains: vector length does not match ambient dimension");
  Vec residual = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational& c = residual[pivot_cols_[r]];
    if (is_zero(c)) continue;
    Rational f = c;
    for (std::size_t j = pivot_cols_[r]; j < ambient_; ++j)
      if (!is_zero(basis_.at(r, j))) residual[j] -= f * basis_.at(r, j);
  }
  return is_zero_vec(residual);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_)
    throw DimensionError("coordinates: vector length does not match ambient dimension");
  Vec residual = v;
  Vec coeffs = zero_vec(basis_.rows());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational& c = residual[pivot_cols_[r]];
    if (is_zero(c)) continue;
    coeffs[r] = c;
    Rational f = c;
    for (std::size_t j = pivot_cols_[r]; j < ambient_; ++j)
      if (!is_zero(basis_.at(r, j))) residual[j] -= f * basis_.at(r, j);
  }
  if (!is_zero_vec(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::grow(const Vec& v) {
  if (v.size() != ambient_)
    throw DimensionError("grow: vector length does not match ambient dimension");
  Vec residual = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational& c = residual[pivot_cols_[r]];
    if (is_zero(c)) continue;
    Rational f = c;
    for (std::size_t j = pivot_cols_[r]; j < ambient_; ++j)
      if (!is_zero(basis_.at(r, j))) residual[j] -= f * basis_.at(r, j);
  }
  std::size_t pivot = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!is_zero(residual[j])) {
      pivot = j;
      break;
    }
  }
  if (pivot == ambient_) return false;
  Rational inv_p = 1 / residual[pivot];
  for (std::size_t j = pivot; j < ambient_; ++j)
    if (!is_zero(residual[j])) residual[j] *= inv_p;

  // Eliminate the new pivot column from the existing rows, then insert the
  // row keeping pivot columns strictly increasing.
  std::size_t insert_at = 0;
  while (insert_at < pivot_cols_.size() && pivot_cols_[insert_at] < pivot) ++insert_at;
  Matrix nb(basis_.rows() + 1, ambient_);
  std::vector<std::size_t> np;
  np.reserve(pivot_cols_.size() + 1);
  std::size_t r = 0;
  for (std::size_t out = 0; out < basis_.rows() + 1; ++out) {
    if (out == insert_at) {
      for (std::size_t j = 0; j < ambient_; ++j) nb.at(out, j) = residual[j];
      np.push_back(pivot);
      continue;
    }
    Rational f = basis_.at(r, pivot);
    for (std::size_t j = 0; j < ambient_; ++j) {
      nb.at(out, j) = basis_.at(r, j);
      if (!is_zero(f) && !is_zero(residual[j])) nb.at(out, j) -= f * residual[j];
    }
    np.push_back(pivot_cols_[r]);
    ++r;
  }
  basis_ = std::move(nb);
  pivot_cols_ = std::move(np);
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("sum of subspaces of different ambient spaces");
  Subspace s = a;
  for (std::size_t r = 0; r < b.dim(); ++r) s.grow(b.basis_row(r));
  return s;
}

Vec minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Vec{Rational(1)};  // constant 1 for the empty matrix
  std::vector<Vec> powers;               // flattened I, M, M^2, ...
  Matrix p = Matrix::identity(n);
  while (true) {
    Vec flat = p.flatten();
    Matrix stacked(n * n, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < n * n; ++i) stacked.at(i, j) = powers[j][i];
    if (!powers.empty()) {
      if (auto coords = solve(stacked, flat)) {
        Vec coeffs(powers.size() + 1, Rational(0));
        for (std::size_t i = 0; i < powers.size(); ++i) coeffs[i] = -(*coords)[i];
        coeffs[powers.size()] = 1;
        return coeffs;
      }
    }
    powers.push_back(std::move(flat));
    p = m * p;
  }
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class a = abs(value);
  std::vector<mpz_class> divs;
  for (mpz_class i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      divs.push_back(i);
      if (i * i != a) divs.push_back(a / i);
    }
  }
  return divs;
}

Rational eval_poly(const Vec& coeffs, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

// Exact synthetic division by (t - r); the remainder is known to vanish.
Vec deflate(const Vec& coeffs, const Rational& r) {
  const std::size_t d = coeffs.size() - 1;
  Vec q(d, Rational(0));
  Rational carry = coeffs[d];
  for (std::size_t i = d; i-- > 0;) {
    q[i] = carry;
    carry = coeffs[i] + r * carry;
  }
  return q;
}

}  // namespace

RationalRoots rational_roots(Vec monic_coeffs) {
  RationalRoots out;
  Vec poly = std::move(monic_coeffs);
  while (poly.size() > 1) {
    // Clear denominators to apply the rational root theorem.
    mpz_class lcm_den(1);
    for (const Rational& c : poly) {
      mpz_class den = c.get_den();
      mpz_class g = gcd(lcm_den, den);
      lcm_den = lcm_den / g * den;
    }
    std::vector<mpz_class> ints;
    ints.reserve(poly.size());
    for (const Rational& c : poly) ints.push_back(mpz_class(c * lcm_den));
    std::optional<Rational> found;
    if (ints.front() == 0) {
      found = Rational(0);
    } else {
      auto ps = positive_divisors(ints.front());
      auto qs = positive_divisors(ints.back());
      for (const auto& p : ps) {
        for (const auto& q : qs) {
          for (int sign : {1, -1}) {
            Rational cand(sign * p, q);
            cand.canonicalize();
            if (is_zero(eval_poly(poly, cand))) {
              found = cand;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
    }
    if (!found) break;
    out.roots.push_back(*found);
    poly = deflate(poly, *found);
  }
  out.remainder_degree = poly.size() - 1;
  return out;
}

}  // namespace jla
