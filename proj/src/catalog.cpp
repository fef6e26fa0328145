#include "jla/catalog.hpp"

#include "jla/error.hpp"

namespace jla {

StructureAlgebra full_matrix_jordan(std::size_t n) {
  if (n == 0) throw PreconditionError("full_matrix_jordan needs n >= 1");
  const std::size_t dim = n * n;
  auto idx = [n](std::size_t p, std::size_t q) { return p * n + q; };
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      names.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
  StructureAlgebra a(dim, std::move(names));
  // e_pq e_rs + e_rs e_pq = [q=r] e_ps + [s=p] e_rq
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          if (q == r) a.c(idx(p, q), idx(r, s), idx(p, s)) += 1;
          if (s == p) a.c(idx(p, q), idx(r, s), idx(r, q)) += 1;
        }
  Vec unit = zero_vec(dim);
  for (std::size_t p = 0; p < n; ++p) unit[idx(p, p)] = Rational(1, 2);
  a.set_unit(std::move(unit));
  return a;
}

StructureAlgebra symmetric_matrix_jordan(std::size_t n) {
  if (n == 0) throw PreconditionError("symmetric_matrix_jordan needs n >= 1");
  StructureAlgebra full = full_matrix_jordan(n);
  auto idx = [n](std::size_t p, std::size_t q) { return p * n + q; };
  std::vector<Vec> basis;
  std::vector<std::string> names;
  for (std::size_t p = 0; p < n; ++p) {
    Vec v = zero_vec(n * n);
    v[idx(p, p)] = 1;
    basis.push_back(std::move(v));
    names.push_back("e" + std::to_string(p + 1) + std::to_string(p + 1));
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      Vec v = zero_vec(n * n);
      v[idx(p, q)] = 1;
      v[idx(q, p)] = 1;
      basis.push_back(std::move(v));
      names.push_back("f" + std::to_string(p + 1) + std::to_string(q + 1));
    }
  StructureAlgebra a = restrict_to_subalgebra(full, basis, std::move(names));
  Vec unit = zero_vec(a.dim());
  for (std::size_t p = 0; p < n; ++p) unit[p] = Rational(1, 2);
  a.set_unit(std::move(unit));
  return a;
}

StructureAlgebra spin_factor(std::size_t m) {
  std::vector<std::string> names{"e"};
  for (std::size_t i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  StructureAlgebra a(m + 1, std::move(names));
  a.c(0, 0, 0) = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    a.c(0, i, i) = 1;
    a.c(i, 0, i) = 1;
    a.c(i, i, 0) = 1;
  }
  a.set_unit(unit_vec(m + 1, 0));
  return a;
}

StructureAlgebra semidirect_sum(const StructureAlgebra& A, const std::vector<Matrix>& phi,
                                std::size_t v_dim) {
  const std::size_t n = A.dim();
  if (phi.size() != n)
    throw DimensionError("semidirect_sum: one matrix per basis vector of A required");
  for (const Matrix& m : phi)
    if (m.rows() != v_dim || m.cols() != v_dim)
      throw DimensionError("semidirect_sum: phi matrices must be v_dim x v_dim");
  std::vector<std::string> names = A.basis_names();
  for (std::size_t b = 0; b < v_dim; ++b) names.push_back("v" + std::to_string(b));
  StructureAlgebra s(n + v_dim, std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.c(i, j, k) = A.c(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < v_dim; ++b)
      for (std::size_t r = 0; r < v_dim; ++r) {
        const Rational& x = phi[i].at(r, b);
        if (is_zero(x)) continue;
        s.c(i, n + b, n + r) = x;
        s.c(n + b, i, n + r) = x;
      }
  if (auto e = unit_element(s)) s.set_unit(*e);
  return s;
}

std::vector<Matrix> adjoint_maps(const StructureAlgebra& A) {
  std::vector<Matrix> maps;
  maps.reserve(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) maps.push_back(A.left_mult(unit_vec(A.dim(), i)));
  return maps;
}

StructureAlgebra restrict_to_subalgebra(const StructureAlgebra& parent,
                                        const std::vector<Vec>& basis,
                                        std::vector<std::string> names) {
  const std::size_t d = basis.size();
  Subspace spanned = Subspace::span(parent.dim(), basis);
  if (spanned.dim() != d)
    throw PreconditionError("restrict_to_subalgebra: basis vectors are dependent");
  // Coordinates in the possibly non-canonical given basis: solve B^T x = v.
  Matrix bt(parent.dim(), d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < parent.dim(); ++i) bt.at(i, j) = basis[j][i];
  StructureAlgebra sub(d, std::move(names));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = parent.multiply(basis[i], basis[j]);
      auto coords = solve(bt, prod);
      if (!coords)
        throw ConstructionError("subalgebra not closed: product of basis " +
                                std::to_string(i) + " and " + std::to_string(j) +
                                " leaves the span");
      for (std::size_t k = 0; k < d; ++k) sub.c(i, j, k) = (*coords)[k];
    }
  return sub;
}

}  // namespace jla
