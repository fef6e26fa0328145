#include "jla/structure_algebra.hpp"

#include "jla/error.hpp"
#include "jla/kernels.hpp"

namespace jla {

StructureAlgebra::StructureAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)), c_(dim * dim * dim, Rational(0)) {
  if (names_.empty()) {
    names_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("b" + std::to_string(i));
  }
  if (names_.size() != dim_) throw DimensionError("basis name count does not match dim");
}

void StructureAlgebra::set_unit(Vec u) {
  if (u.size() != dim_) throw DimensionError("unit length does not match dim");
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec b = unit_vec(dim_, i);
    if (multiply(u, b) != b || multiply(b, u) != b)
      throw PreconditionError("claimed unit does not act as identity on basis " +
                              std::to_string(i));
  }
  unit_ = std::move(u);
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionError("multiply: coordinate length mismatch");
  Vec r = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      Rational s = x[i] * y[j];
      auto prod = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!is_zero(prod[k])) r[k] += s * prod[k];
    }
  }
  return r;
}

Matrix StructureAlgebra::left_mult(const Vec& a) const {
  if (a.size() != dim_) throw DimensionError("left_mult: coordinate length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      auto prod = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!is_zero(prod[k])) m.at(k, j) += a[i] * prod[k];
    }
  }
  return m;
}

bool check_commutative(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != a.c(j, i, k)) return false;
  return true;
}

CheckResult check_jordan(const StructureAlgebra& a, int jobs) {
  if (!check_commutative(a))
    throw PreconditionError("check_jordan requires a commutative algebra");
  return jobs > 1 ? jordan_sweep_parallel(a, jobs) : jordan_sweep_serial(a);
}

CheckResult check_jacobi(const StructureAlgebra& a, int jobs) {
  CheckResult anti = antisymmetry_scan(a);
  if (!anti.ok) return anti;
  return jobs > 1 ? jacobi_sweep_parallel(a, jobs) : jacobi_sweep_serial(a);
}

std::optional<Vec> unit_element(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Vec{};
  // e * b_j = b_j for all j: unknowns e_i, equations indexed by (j, k).
  Matrix coeffs(n * n, n);
  Vec rhs = zero_vec(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) coeffs.at(j * n + k, i) = a.c(i, j, k);
      rhs[j * n + k] = (j == k) ? 1 : 0;
    }
  auto e = solve(coeffs, rhs);
  if (!e) return std::nullopt;
  // For non-commutative input, demand a two-sided unit.
  for (std::size_t j = 0; j < n; ++j) {
    Vec b = unit_vec(n, j);
    if (a.multiply(b, *e) != b) return std::nullopt;
  }
  return e;
}

}  // namespace jla
