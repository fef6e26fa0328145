#pragma once

#include <array>
#include <optional>

#include "jla/structure_algebra.hpp"

namespace jla {

/// Symmetric bilinear map U x U -> U on the space of an algebra, stored as a
/// dim x dim grid of coordinate vectors.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t dim)
      : dim_(dim), vals_(dim * dim, zero_vec(dim)) {}

  std::size_t dim() const { return dim_; }
  Vec& at(std::size_t i, std::size_t j) { return vals_[i * dim_ + j]; }
  const Vec& at(std::size_t i, std::size_t j) const { return vals_[i * dim_ + j]; }

  bool is_symmetric() const;
  Vec flatten() const;  // length dim^3, (i,j,k) order
  static BilinearMap unflatten(std::size_t dim, const Vec& flat);

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> vals_;
};

/// The multiplication map of A: (x,y) -> x*y.
BilinearMap multiplication_map(const StructureAlgebra& A);

/// A_a(x,y) = (x*a)*y + (y*a)*x - a*(x*y); symmetric in x and y.
BilinearMap a_operator(const StructureAlgebra& A, const Vec& a);

/// Canonical basis of the operator span {L_a, [L_a, L_b]} on A; verified to
/// be a Lie subalgebra closed under commutation with every L_a.
struct OperatorSpace {
  std::size_t ambient_dim = 0;        // dim of A
  std::vector<Matrix> basis;          // canonical (RREF of flattened) operators
  Subspace flat;                      // the same space over dim^2 coordinates
};
OperatorSpace build_S(const StructureAlgebra& A);

/// Canonical basis of the span of the multiplication map and all A_a.
struct BilinearMapSpace {
  std::size_t ambient_dim = 0;
  std::vector<BilinearMap> basis;
  Subspace flat;                      // over dim^3 coordinates
};
BilinearMapSpace build_Ubar(const StructureAlgebra& A);

/// The 3-graded Lie algebra built from a Jordan algebra: basis is the
/// concatenation of the A basis (degree -1), the canonical operator basis
/// (degree 0) and the canonical bilinear-map basis (degree +1).
struct GradedLieAlgebra {
  StructureAlgebra lie;
  std::vector<int> degrees;               // -1, 0, +1 per basis vector
  Vec abar;                                // multiplication map in U1-block coordinates
  std::array<std::size_t, 3> piece_dims{};  // d(-1), d(0), d(+1)

  std::size_t dim() const { return lie.dim(); }
  std::size_t a_dim() const { return piece_dims[0]; }
  std::size_t block_offset(int deg) const;

  /// A-coordinates into full L-coordinates (degree -1 block).
  Vec embed_uminus(const Vec& x) const;
  /// Full-length coordinates of the multiplication-map element.
  Vec abar_full() const;
  /// Bracket of two elements given by full-length coordinates.
  Vec bracket(const Vec& x, const Vec& y) const;
};

/// Builds the graded Lie algebra and verifies it: bracket closure (with the
/// offending pair on failure), the derived degree-0/+1 actions against
/// [L_a, Abar] = -A_a and [L_b, A_a] = -A_(a*b), grading compatibility, and
/// (optionally) the full Jacobi sweep. Throws ConstructionError on any
/// failure. The input is assumed Jordan; feeding a non-Jordan commutative
/// algebra surfaces as a closure error or a Jacobi witness.
GradedLieAlgebra build_tkk(const StructureAlgebra& A, int jobs = 1,
                           bool verify_jacobi = true);

/// [[Abar, x], y] evaluated through the assembled structure constants;
/// equals the product of A exactly (exercised by the round-trip tests).
Vec recover_product(const GradedLieAlgebra& L, const Vec& x, const Vec& y);

/// True iff iterated brackets of U_{-1} and the multiplication-map element
/// span all of L.
bool check_generation(const GradedLieAlgebra& L);

/// The unique z in the degree-0 block with [z, x] = deg(x) x for all basis x,
/// as full-length coordinates; nullopt when the defining system is
/// inconsistent.
std::optional<Vec> grading_element(const GradedLieAlgebra& L);

/// Bracket support lies in the degree-sum block; sums outside {-1,0,1} are 0.
CheckResult check_grading(const GradedLieAlgebra& L);

/// Saturation of the span of the seeds under bracketing. With ideal=false,
/// brackets among the current span are added; with ideal=true, brackets with
/// every basis vector of L are added.
Subspace bracket_saturate(const StructureAlgebra& lie, std::vector<Vec> seeds, bool ideal);

}  // namespace jla
