#pragma once

#include <optional>
#include <vector>

#include "jla/matrix.hpp"

namespace jla {

struct RrefResult {
  Matrix mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, strictly increasing
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(Matrix m);

/// One exact solution of coeffs * x = rhs, free variables pinned to zero.
/// Returns nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& coeffs, const Vec& rhs);

/// Basis of the right nullspace { v : m * v = 0 }.
std::vector<Vec> nullspace(const Matrix& m);

/// Exact inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A linear subspace in canonical form: the stored basis is the RREF of the
/// generators, so equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  /// Coordinates of v in the canonical basis rows; nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Adds a vector to the span; returns true if the dimension grew.
  bool grow(const Vec& v);

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;                          // RREF rows, no zero rows
  std::vector<std::size_t> pivot_cols_;   // pivot column per row
};

Subspace sum(const Subspace& a, const Subspace& b);

/// Coefficients c_0..c_d (low to high, c_d = 1) of the monic minimal
/// polynomial, found by the first linear dependence among powers.
Vec minimal_polynomial(const Matrix& m);

/// Rational roots of a monic rational polynomial, with multiplicity, found by
/// candidate testing and exact deflation. remainder_degree > 0 means a factor
/// without rational roots is left.
struct RationalRoots {
  std::vector<Rational> roots;
  std::size_t remainder_degree = 0;
};
RationalRoots rational_roots(Vec monic_coeffs);

}  // namespace jla
