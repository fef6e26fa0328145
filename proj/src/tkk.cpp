#include "jla/tkk.hpp"

#include "jla/error.hpp"
#include "jla/kernels.hpp"

namespace jla {

bool BilinearMap::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Vec BilinearMap::flatten() const {
  Vec flat;
  flat.reserve(dim_ * dim_ * dim_);
  for (const Vec& v : vals_) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

BilinearMap BilinearMap::unflatten(std::size_t dim, const Vec& flat) {
  if (flat.size() != dim * dim * dim)
    throw DimensionError("bilinear map flattening has wrong length");
  BilinearMap m(dim);
  for (std::size_t i = 0; i < dim * dim; ++i)
    m.vals_[i] = Vec(flat.begin() + i * dim, flat.begin() + (i + 1) * dim);
  return m;
}

BilinearMap multiplication_map(const StructureAlgebra& A) {
  const std::size_t n = A.dim();
  BilinearMap m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = A.basis_product(i, j);
      m.at(i, j) = Vec(prod.begin(), prod.end());
    }
  return m;
}

BilinearMap a_operator(const StructureAlgebra& A, const Vec& a) {
  const std::size_t n = A.dim();
  BilinearMap m(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec bi = unit_vec(n, i);
    Vec bia = A.multiply(bi, a);
    for (std::size_t j = 0; j < n; ++j) {
      Vec bj = unit_vec(n, j);
      Vec bja = A.multiply(bj, a);
      m.at(i, j) = A.multiply(bia, bj) + A.multiply(bja, bi) - A.multiply(a, A.multiply(bi, bj));
    }
  }
  return m;
}

OperatorSpace build_S(const StructureAlgebra& A) {
  const std::size_t n = A.dim();
  OperatorSpace s;
  s.ambient_dim = n;
  s.flat = Subspace(n * n);
  std::vector<Matrix> lefts;
  for (std::size_t i = 0; i < n; ++i) {
    lefts.push_back(A.left_mult(unit_vec(n, i)));
    s.flat.grow(lefts.back().flatten());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      s.flat.grow(commutator(lefts[i], lefts[j]).flatten());
  for (std::size_t r = 0; r < s.flat.dim(); ++r)
    s.basis.push_back(Matrix::unflatten(n, n, s.flat.basis_row(r)));
  // Internal Lie closure; this also covers commutation with every L_a.
  for (std::size_t p = 0; p < s.basis.size(); ++p)
    for (std::size_t q = p + 1; q < s.basis.size(); ++q)
      if (!s.flat.contains(commutator(s.basis[p], s.basis[q]).flatten()))
        throw ConstructionError("operator span is not a Lie subalgebra at basis pair (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
  return s;
}

BilinearMapSpace build_Ubar(const StructureAlgebra& A) {
  const std::size_t n = A.dim();
  BilinearMapSpace u;
  u.ambient_dim = n;
  u.flat = Subspace(n * n * n);
  u.flat.grow(multiplication_map(A).flatten());
  for (std::size_t i = 0; i < n; ++i) u.flat.grow(a_operator(A, unit_vec(n, i)).flatten());
  for (std::size_t r = 0; r < u.flat.dim(); ++r)
    u.basis.push_back(BilinearMap::unflatten(n, u.flat.basis_row(r)));
  return u;
}

std::size_t GradedLieAlgebra::block_offset(int deg) const {
  if (deg == -1) return 0;
  if (deg == 0) return piece_dims[0];
  if (deg == 1) return piece_dims[0] + piece_dims[1];
  throw DimensionError("degree outside {-1,0,1}");
}

Vec GradedLieAlgebra::embed_uminus(const Vec& x) const {
  if (x.size() != piece_dims[0]) throw DimensionError("element is not in the U_{-1} block");
  Vec full = zero_vec(dim());
  for (std::size_t i = 0; i < x.size(); ++i) full[i] = x[i];
  return full;
}

Vec GradedLieAlgebra::abar_full() const {
  Vec full = zero_vec(dim());
  std::size_t off = block_offset(1);
  for (std::size_t i = 0; i < abar.size(); ++i) full[off + i] = abar[i];
  return full;
}

Vec GradedLieAlgebra::bracket(const Vec& x, const Vec& y) const { return lie.multiply(x, y); }

namespace {

// Operator y -> F(x_i, y) as a matrix.
Matrix partial_operator(const BilinearMap& f, std::size_t i) {
  const std::size_t n = f.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec& v = f.at(i, j);
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = v[k];
  }
  return m;
}

// The bilinear map (x,y) -> S(F(x,y)) - F(Sx,y) - F(x,Sy).
BilinearMap operator_action(const Matrix& s, const BilinearMap& f) {
  const std::size_t n = f.dim();
  BilinearMap g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = s * f.at(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(s.at(k, i))) add_scaled(v, -s.at(k, i), f.at(k, j));
        if (!is_zero(s.at(k, j))) add_scaled(v, -s.at(k, j), f.at(i, k));
      }
      g.at(i, j) = std::move(v);
    }
  return g;
}

}  // namespace

GradedLieAlgebra build_tkk(const StructureAlgebra& A, int jobs, bool verify_jacobi) {
  const std::size_t n = A.dim();
  OperatorSpace S = build_S(A);
  BilinearMapSpace U = build_Ubar(A);
  const std::size_t s = S.basis.size(), u = U.basis.size();
  const std::size_t N = n + s + u;

  std::vector<std::string> names = A.basis_names();
  for (std::size_t p = 0; p < s; ++p) names.push_back("S" + std::to_string(p));
  for (std::size_t p = 0; p < u; ++p) names.push_back("F" + std::to_string(p));

  GradedLieAlgebra L;
  L.lie = StructureAlgebra(N, std::move(names));
  L.degrees.assign(N, 0);
  for (std::size_t i = 0; i < n; ++i) L.degrees[i] = -1;
  for (std::size_t p = 0; p < u; ++p) L.degrees[n + s + p] = 1;
  L.piece_dims = {n, s, u};
  const std::size_t offS = n, offU = n + s;

  // [S_p, x_j] = S_p(x_j) in U_{-1}.
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = S.basis[p].at(k, j);
        if (is_zero(v)) continue;
        L.lie.c(offS + p, j, k) = v;
        L.lie.c(j, offS + p, k) = -v;
      }

  // [S_p, S_q] = matrix commutator, expressed in the canonical operator basis.
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = p + 1; q < s; ++q) {
      auto coords = S.flat.coordinates(commutator(S.basis[p], S.basis[q]).flatten());
      if (!coords)
        throw ConstructionError("[S,S] leaves the operator span at pair (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
      for (std::size_t r = 0; r < s; ++r) {
        if (is_zero((*coords)[r])) continue;
        L.lie.c(offS + p, offS + q, offS + r) = (*coords)[r];
        L.lie.c(offS + q, offS + p, offS + r) = -(*coords)[r];
      }
    }

  // [F_p, x_j]: the operator y -> F_p(x_j, y); must land in the operator span.
  for (std::size_t p = 0; p < u; ++p)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = S.flat.coordinates(partial_operator(U.basis[p], j).flatten());
      if (!coords)
        throw ConstructionError("[F,x] leaves the operator span at pair (F" +
                                std::to_string(p) + ", x" + std::to_string(j) + ")");
      for (std::size_t r = 0; r < s; ++r) {
        if (is_zero((*coords)[r])) continue;
        L.lie.c(offU + p, j, offS + r) = (*coords)[r];
        L.lie.c(j, offU + p, offS + r) = -(*coords)[r];
      }
    }

  // [S_p, F_q]: the map (x,y) -> S(F(x,y)) - F(Sx,y) - F(x,Sy) in U_1.
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < u; ++q) {
      auto coords = U.flat.coordinates(operator_action(S.basis[p], U.basis[q]).flatten());
      if (!coords)
        throw ConstructionError("[S,F] leaves the bilinear-map span at pair (S" +
                                std::to_string(p) + ", F" + std::to_string(q) + ")");
      for (std::size_t r = 0; r < u; ++r) {
        if (is_zero((*coords)[r])) continue;
        L.lie.c(offS + p, offU + q, offU + r) = (*coords)[r];
        L.lie.c(offU + q, offS + p, offU + r) = -(*coords)[r];
      }
    }

  auto abar_coords = U.flat.coordinates(multiplication_map(A).flatten());
  if (!abar_coords) throw ConstructionError("multiplication map missing from its own span");
  L.abar = *abar_coords;

  // Derived degree-0 action must reproduce [L_a, Abar] = -A_a and
  // [L_b, A_a] = -A_{a*b} on all basis pairs.
  Vec abar_elt = L.abar_full();
  std::vector<Vec> la_full(n), aa_full(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto lc = S.flat.coordinates(A.left_mult(unit_vec(n, i)).flatten());
    auto ac = U.flat.coordinates(a_operator(A, unit_vec(n, i)).flatten());
    if (!lc || !ac)
      throw ConstructionError("generator missing from its own span at basis " +
                              std::to_string(i));
    la_full[i] = zero_vec(N);
    aa_full[i] = zero_vec(N);
    for (std::size_t r = 0; r < s; ++r) la_full[i][offS + r] = (*lc)[r];
    for (std::size_t r = 0; r < u; ++r) aa_full[i][offU + r] = (*ac)[r];
  }
  for (std::size_t a = 0; a < n; ++a) {
    Vec lhs = L.bracket(la_full[a], abar_elt);
    Vec rhs = zero_vec(N);
    add_scaled(rhs, Rational(-1), aa_full[a]);
    if (lhs != rhs)
      throw ConstructionError("[L_a, Abar] != -A_a at basis " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec lhs = L.bracket(la_full[b], aa_full[a]);
      Vec ab = A.multiply(unit_vec(n, a), unit_vec(n, b));
      auto ac = U.flat.coordinates(a_operator(A, ab).flatten());
      if (!ac)
        throw ConstructionError("A_{a*b} leaves the bilinear-map span at pair (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
      Vec rhs = zero_vec(N);
      for (std::size_t r = 0; r < u; ++r) rhs[offU + r] = -(*ac)[r];
      if (lhs != rhs)
        throw ConstructionError("[L_b, A_a] != -A_{a*b} at pair (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
    }

  if (CheckResult g = check_grading(L); !g.ok)
    throw ConstructionError("grading violated: " + g.witness->detail);

  if (verify_jacobi) {
    if (CheckResult j = check_jacobi(L.lie, jobs); !j.ok) {
      std::string where;
      for (std::size_t i : j.witness->indices) where += " " + std::to_string(i);
      throw ConstructionError(j.witness->detail + " (triple:" + where + ")");
    }
  }
  return L;
}

Vec recover_product(const GradedLieAlgebra& L, const Vec& x, const Vec& y) {
  Vec t = L.bracket(L.abar_full(), L.embed_uminus(x));
  Vec r = L.bracket(t, L.embed_uminus(y));
  const std::size_t n = L.a_dim();
  for (std::size_t i = n; i < L.dim(); ++i)
    if (!is_zero(r[i]))
      throw ConstructionError("double commutator left the U_{-1} block");
  return Vec(r.begin(), r.begin() + n);
}

Subspace bracket_saturate(const StructureAlgebra& lie, std::vector<Vec> seeds, bool ideal) {
  const std::size_t N = lie.dim();
  Subspace span = Subspace::span(N, seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> rows;
    rows.reserve(span.dim());
    for (std::size_t r = 0; r < span.dim(); ++r) rows.push_back(span.basis_row(r));
    if (ideal) {
      for (std::size_t i = 0; i < N; ++i) {
        Vec bi = unit_vec(N, i);
        for (const Vec& row : rows)
          if (span.grow(lie.multiply(bi, row))) grew = true;
      }
    } else {
      for (std::size_t p = 0; p < rows.size(); ++p)
        for (std::size_t q = p + 1; q < rows.size(); ++q)
          if (span.grow(lie.multiply(rows[p], rows[q]))) grew = true;
    }
  }
  return span;
}

bool check_generation(const GradedLieAlgebra& L) {
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < L.a_dim(); ++i)
    seeds.push_back(unit_vec(L.dim(), i));
  seeds.push_back(L.abar_full());
  return bracket_saturate(L.lie, std::move(seeds), false).dim() == L.dim();
}

std::optional<Vec> grading_element(const GradedLieAlgebra& L) {
  const std::size_t N = L.dim(), s = L.piece_dims[1], offS = L.block_offset(0);
  Matrix coeffs(N * N, s);
  Vec rhs = zero_vec(N * N);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t m = 0; m < N; ++m) {
      for (std::size_t p = 0; p < s; ++p) coeffs.at(j * N + m, p) = L.lie.c(offS + p, j, m);
      rhs[j * N + m] = (j == m) ? Rational(L.degrees[j]) : Rational(0);
    }
  auto z = solve(coeffs, rhs);
  if (!z) return std::nullopt;
  Vec full = zero_vec(N);
  for (std::size_t p = 0; p < s; ++p) full[offS + p] = (*z)[p];
  return full;
}

CheckResult check_grading(const GradedLieAlgebra& L) {
  const std::size_t N = L.dim();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int d = L.degrees[i] + L.degrees[j];
      for (std::size_t k = 0; k < N; ++k) {
        if (is_zero(L.lie.c(i, j, k))) continue;
        if (d < -1 || d > 1 || L.degrees[k] != d)
          return CheckResult::fail({i, j, k},
                                   "bracket support outside the degree-sum block");
      }
    }
  return CheckResult::pass();
}

}  // namespace jla
