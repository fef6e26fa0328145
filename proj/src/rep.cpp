#include "jla/rep.hpp"

#include "jla/error.hpp"

namespace jla {

LinearRep zero_rep(std::size_t basis_count, std::size_t v_dim) {
  return {v_dim, std::vector<Matrix>(basis_count, Matrix(v_dim, v_dim))};
}

Matrix rep_apply(const LinearRep& rep, const Vec& coords) {
  if (coords.size() != rep.images.size())
    throw DimensionError("rep_apply: coordinate length does not match basis count");
  Matrix m(rep.v_dim, rep.v_dim);
  for (std::size_t i = 0; i < coords.size(); ++i) m.add_scaled(coords[i], rep.images[i]);
  return m;
}

CheckResult check_lie_rep(const StructureAlgebra& lie, const LinearRep& rho, int jobs) {
  (void)jobs;
  const std::size_t n = lie.dim();
  if (rho.images.size() != n)
    throw DimensionError("check_lie_rep: one image per basis vector required");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs = commutator(rho.images[i], rho.images[j]);
      Matrix rhs(rho.v_dim, rho.v_dim);
      auto prod = lie.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(prod[k])) rhs.add_scaled(prod[k], rho.images[k]);
      if (lhs != rhs)
        return CheckResult::fail({i, j}, "not a Lie homomorphism at basis pair");
    }
  return CheckResult::pass();
}

LinearRep adjoint_rep(const StructureAlgebra& alg) {
  const std::size_t n = alg.dim();
  LinearRep rep{n, {}};
  rep.images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rep.images.push_back(alg.left_mult(unit_vec(n, i)));
  return rep;
}

LinearRep rep_from_generators(const StructureAlgebra& lie,
                              std::vector<std::pair<Vec, Matrix>> generators,
                              int jobs) {
  const std::size_t N = lie.dim();
  if (generators.empty()) throw PreconditionError("no generators given");
  const std::size_t k = generators.front().second.rows();
  for (auto& [v, m] : generators) {
    if (v.size() != N) throw DimensionError("generator element length mismatch");
    if (m.rows() != k || m.cols() != k) throw DimensionError("generator image shape mismatch");
  }

  // Augmented rows [element | flattened image], reduced on the element part
  // only. A zero element with a nonzero image means the assignment is not
  // well defined.
  const std::size_t width = N + k * k;
  std::vector<Vec> rows;       // reduced rows
  std::vector<std::size_t> pivots;
  auto reduce_insert = [&](Vec row) -> bool {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& c = row[pivots[r]];
      if (is_zero(c)) continue;
      Rational f = c;
      for (std::size_t j = 0; j < width; ++j)
        if (!is_zero(rows[r][j])) row[j] -= f * rows[r][j];
    }
    std::size_t pivot = N;
    for (std::size_t j = 0; j < N; ++j)
      if (!is_zero(row[j])) {
        pivot = j;
        break;
      }
    if (pivot == N) {
      for (std::size_t j = N; j < width; ++j)
        if (!is_zero(row[j]))
          throw ConstructionError(
              "generator images are inconsistent: a vanishing combination of "
              "elements has a nonvanishing image");
      return false;
    }
    Rational inv_p = 1 / row[pivot];
    for (std::size_t j = 0; j < width; ++j)
      if (!is_zero(row[j])) row[j] *= inv_p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& c = rows[r][pivot];
      if (is_zero(c)) continue;
      Rational f = c;
      for (std::size_t j = 0; j < width; ++j)
        if (!is_zero(row[j])) rows[r][j] -= f * row[j];
    }
    std::size_t at = 0;
    while (at < pivots.size() && pivots[at] < pivot) ++at;
    rows.insert(rows.begin() + at, std::move(row));
    pivots.insert(pivots.begin() + at, pivot);
    return true;
  };

  auto make_row = [&](const Vec& elt, const Matrix& img) {
    Vec row = elt;
    row.resize(width, Rational(0));
    Vec f = img.flatten();
    for (std::size_t j = 0; j < f.size(); ++j) row[N + j] = f[j];
    return row;
  };

  for (auto& [v, m] : generators) reduce_insert(make_row(v, m));

  // Saturate under bracketing until the element span stops growing.
  bool grew = true;
  while (grew && rows.size() < N) {
    grew = false;
    std::vector<std::pair<Vec, Matrix>> current;
    current.reserve(rows.size());
    for (const Vec& row : rows) {
      Vec elt(row.begin(), row.begin() + N);
      Matrix img = Matrix::unflatten(k, k, Vec(row.begin() + N, row.end()));
      current.emplace_back(std::move(elt), std::move(img));
    }
    for (std::size_t p = 0; p < current.size(); ++p)
      for (std::size_t q = p + 1; q < current.size(); ++q) {
        Vec elt = lie.multiply(current[p].first, current[q].first);
        Matrix img = commutator(current[p].second, current[q].second);
        if (reduce_insert(make_row(elt, img))) grew = true;
      }
  }
  if (rows.size() < N)
    throw ConstructionError("generators do not generate the whole algebra (span " +
                            std::to_string(rows.size()) + " of " + std::to_string(N) + ")");

  LinearRep rep{k, {}};
  rep.images.reserve(N);
  for (std::size_t b = 0; b < N; ++b) {
    Vec residual = unit_vec(N, b);
    Matrix img(k, k);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& c = residual[pivots[r]];
      if (is_zero(c)) continue;
      Rational f = c;
      for (std::size_t j = 0; j < N; ++j)
        if (!is_zero(rows[r][j])) residual[j] -= f * rows[r][j];
      img.add_scaled(f, Matrix::unflatten(k, k, Vec(rows[r].begin() + N, rows[r].end())));
    }
    rep.images.push_back(std::move(img));
  }

  if (CheckResult c = check_lie_rep(lie, rep, jobs); !c.ok)
    throw ConstructionError("generated assignment is not a representation: " +
                            c.witness->detail);
  return rep;
}

LinearRep doubled_block_rep(const GradedLieAlgebra& L, const LinearRep& phi) {
  const std::size_t n = L.a_dim(), v = phi.v_dim;
  if (phi.images.size() != n)
    throw DimensionError("doubled_block_rep: phi must represent the U_{-1} algebra");
  std::vector<std::pair<Vec, Matrix>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix img(2 * v, 2 * v);
    for (std::size_t r = 0; r < v; ++r)
      for (std::size_t c = 0; c < v; ++c) img.at(r, v + c) = phi.images[i].at(r, c);
    gens.emplace_back(unit_vec(L.dim(), i), std::move(img));
  }
  Matrix abar_img(2 * v, 2 * v);
  for (std::size_t r = 0; r < v; ++r) abar_img.at(v + r, r) = -1;
  gens.emplace_back(L.abar_full(), std::move(abar_img));
  return rep_from_generators(L.lie, std::move(gens));
}

}  // namespace jla
