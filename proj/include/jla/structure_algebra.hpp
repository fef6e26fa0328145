#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jla/linalg.hpp"

namespace jla {

/// Outcome of an identity sweep. A failed check carries the offending basis
/// indices and a short description of the violated identity.
struct Witness {
  std::vector<std::size_t> indices;
  std::string detail;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<std::size_t> idx, std::string detail) {
    return {false, Witness{std::move(idx), std::move(detail)}};
  }
};

/// A finite-dimensional algebra presented by structure constants c_{ij}^k:
/// the product of basis i and basis j has coefficient c_{ij}^k on basis k.
/// Represents Jordan algebras, Lie algebras and chain algebras uniformly.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  explicit StructureAlgebra(std::size_t dim, std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// The product of basis vectors i and j as a coordinate span.
  std::span<const Rational> basis_product(std::size_t i, std::size_t j) const {
    return {c_.data() + (i * dim_ + j) * dim_, dim_};
  }

  const std::optional<Vec>& unit() const { return unit_; }
  /// Stores a unit after verifying u*b_i = b_i*u = b_i for every basis i.
  void set_unit(Vec u);

  /// Bilinear extension of the structure constants.
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Matrix of x -> a*x in the basis.
  Matrix left_mult(const Vec& a) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Rational> c_;  // (i*dim + j)*dim + k
  std::optional<Vec> unit_;
};

bool check_commutative(const StructureAlgebra& a);

/// Jordan law via the full linearization [L_u,L_{v*w}]+[L_v,L_{w*u}]+[L_w,L_{u*v}]=0,
/// exhaustive over basis triples (exact over characteristic zero).
/// Precondition: commutative (throws PreconditionError otherwise).
CheckResult check_jordan(const StructureAlgebra& a, int jobs = 1);

/// Antisymmetry plus the Jacobi identity on all basis triples.
CheckResult check_jacobi(const StructureAlgebra& a, int jobs = 1);

/// Solves e*b_i = b_i for all basis i; nullopt when no unit exists.
std::optional<Vec> unit_element(const StructureAlgebra& a);

}  // namespace jla
