#include "jla/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <atomic>

namespace jla {

namespace {

// acc += [v, b_t] where v is a coordinate vector: acc_r += sum_m v_m c(m,t,r).
void add_bracket_with_basis(const StructureAlgebra& a, std::span<const Rational> v,
                            std::size_t t, Vec& acc) {
  const std::size_t n = a.dim();
  for (std::size_t m = 0; m < n; ++m) {
    if (is_zero(v[m])) continue;
    auto prod = a.basis_product(m, t);
    for (std::size_t r = 0; r < n; ++r)
      if (!is_zero(prod[r])) acc[r] += v[m] * prod[r];
  }
}

// The Jacobi defect [[i,j],k] + [[j,k],i] + [[k,i],j] written into acc.
bool jacobi_triple_ok(const StructureAlgebra& a, std::size_t i, std::size_t j,
                      std::size_t k, Vec& acc) {
  std::fill(acc.begin(), acc.end(), Rational(0));
  add_bracket_with_basis(a, a.basis_product(i, j), k, acc);
  add_bracket_with_basis(a, a.basis_product(j, k), i, acc);
  add_bracket_with_basis(a, a.basis_product(k, i), j, acc);
  return is_zero_vec(acc);
}

struct LinearizedJordanTables {
  std::vector<Matrix> left;          // L_i per basis vector
  std::vector<Matrix> comm;          // [L_i, L_j] at i*dim + j
};

LinearizedJordanTables jordan_tables(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  LinearizedJordanTables t;
  t.left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.left.push_back(a.left_mult(unit_vec(n, i)));
  t.comm.assign(n * n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      t.comm[i * n + j] = commutator(t.left[i], t.left[j]);
      t.comm[j * n + i] = -t.comm[i * n + j];
    }
  return t;
}

// [L_u, L_{v*w}] + [L_v, L_{w*u}] + [L_w, L_{u*v}] written into acc.
bool jordan_triple_ok(const StructureAlgebra& a, const LinearizedJordanTables& t,
                      std::size_t u, std::size_t v, std::size_t w, Matrix& acc) {
  const std::size_t n = a.dim();
  acc = Matrix(n, n);
  auto vw = a.basis_product(v, w);
  auto wu = a.basis_product(w, u);
  auto uv = a.basis_product(u, v);
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_zero(vw[k])) acc.add_scaled(vw[k], t.comm[u * n + k]);
    if (!is_zero(wu[k])) acc.add_scaled(wu[k], t.comm[v * n + k]);
    if (!is_zero(uv[k])) acc.add_scaled(uv[k], t.comm[w * n + k]);
  }
  return acc.is_zero();
}

}  // namespace

CheckResult antisymmetry_scan(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != -a.c(j, i, k))
          return CheckResult::fail({i, j, k}, "antisymmetry: c(i,j,k) != -c(j,i,k)");
  return CheckResult::pass();
}

CheckResult jacobi_sweep_serial(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Vec acc = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!jacobi_triple_ok(a, i, j, k, acc))
          return CheckResult::fail({i, j, k}, "Jacobi identity fails at basis triple");
  return CheckResult::pass();
}

CheckResult jacobi_sweep_parallel(const StructureAlgebra& a, int jobs) {
#ifndef _OPENMP
  (void)jobs;
  return jacobi_sweep_serial(a);
#else
  const std::size_t n = a.dim();
  const std::size_t pairs = n * n;
  std::atomic<bool> found{false};
  std::vector<std::size_t> best;  // lexicographically smallest violating triple

#pragma omp parallel num_threads(jobs)
  {
    Vec acc = zero_vec(n);
    std::vector<std::size_t> local;
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pairs); ++p) {
      if (found.load(std::memory_order_relaxed) && !local.empty()) continue;
      std::size_t i = static_cast<std::size_t>(p) / n;
      std::size_t j = static_cast<std::size_t>(p) % n;
      for (std::size_t k = 0; k < n; ++k) {
        if (!jacobi_triple_ok(a, i, j, k, acc)) {
          if (local.empty() || std::vector<std::size_t>{i, j, k} < local)
            local = {i, j, k};
          found.store(true, std::memory_order_relaxed);
          break;
        }
      }
    }
#pragma omp critical
    {
      if (!local.empty() && (best.empty() || local < best)) best = local;
    }
  }
  if (best.empty()) return CheckResult::pass();
  return CheckResult::fail(best, "Jacobi identity fails at basis triple");
#endif
}

CheckResult jordan_sweep_serial(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  LinearizedJordanTables t = jordan_tables(a);
  Matrix acc(n, n);
  // The linearized identity is symmetric in (u,v,w) over a commutative
  // algebra, so unordered triples cover all of them.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v)
      for (std::size_t w = v; w < n; ++w)
        if (!jordan_triple_ok(a, t, u, v, w, acc))
          return CheckResult::fail({u, v, w},
                                   "linearized Jordan identity fails at basis triple");
  return CheckResult::pass();
}

CheckResult jordan_sweep_parallel(const StructureAlgebra& a, int jobs) {
#ifndef _OPENMP
  (void)jobs;
  return jordan_sweep_serial(a);
#else
  const std::size_t n = a.dim();
  LinearizedJordanTables t = jordan_tables(a);
  std::atomic<bool> found{false};
  std::vector<std::size_t> best;

#pragma omp parallel num_threads(jobs)
  {
    Matrix acc(n, n);
    std::vector<std::size_t> local;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(n); ++u) {
      if (found.load(std::memory_order_relaxed) && !local.empty()) continue;
      for (std::size_t v = static_cast<std::size_t>(u); v < n; ++v)
        for (std::size_t w = v; w < n; ++w) {
          std::size_t uu = static_cast<std::size_t>(u);
          if (!jordan_triple_ok(a, t, uu, v, w, acc)) {
            if (local.empty() || std::vector<std::size_t>{uu, v, w} < local)
              local = {uu, v, w};
            found.store(true, std::memory_order_relaxed);
          }
        }
    }
#pragma omp critical
    {
      if (!local.empty() && (best.empty() || local < best)) best = local;
    }
  }
  if (best.empty()) return CheckResult::pass();
  return CheckResult::fail(best, "linearized Jordan identity fails at basis triple");
#endif
}

}  // namespace jla
