#pragma once

#include "jla/rep.hpp"

namespace jla {

/// x *_a y = [[x,a],y] = xay + yax - axy - yxa.
Matrix star_a(const Matrix& x, const Matrix& y, const Matrix& a);

/// A generalized representation: a homomorphism of a unital Jordan algebra
/// into End V with the *_anchor product, subject to
/// [anchor, [pi(e), anchor]] = anchor.
struct GenRep {
  StructureAlgebra algebra;
  std::size_t v_dim = 0;
  std::vector<Matrix> images;
  Matrix anchor;
};

/// phi(x*y) = phi(x)phi(y) + phi(y)phi(x) on all basis pairs.
CheckResult check_usual(const StructureAlgebra& A, const LinearRep& phi);

/// True iff the semidirect sum of A and V via phi is again Jordan.
CheckResult check_jacobson(const StructureAlgebra& A, const LinearRep& phi, int jobs = 1);

/// Both defining laws of a generalized representation, exhaustively.
CheckResult check_generalized(const GenRep& r);

/// The doubled-space generalized representation associated with a usual
/// representation: images [[0, phi(x)], [0, 0]] and anchor [[0,0],[E,0]].
/// Requires phi usual and phi(e) = (1/2) identity (a usual representation
/// whose unit image is degenerate, e.g. zero, has no such lift; the anchor
/// law would fail).
GenRep from_usual(const StructureAlgebra& A, const LinearRep& phi);

/// The generalized representation associated with a Jacobson representation,
/// realized on the graded ideal complement of L(A) inside L(A + V): images
/// are ad(b) restricted to the ideal, the anchor is the restriction of
/// -ad(multiplication map). Returns the intermediate objects alongside.
struct JacobsonLift {
  GenRep rep;
  GradedLieAlgebra L;        // L(A)
  LinearRep rho;             // representation of L(A) on the ideal
  GradedLieAlgebra Lhat;     // L(A + V)
  std::vector<Vec> ideal_basis;  // basis of the ideal inside L(A + V)
};
JacobsonLift from_jacobson(const StructureAlgebra& A, const LinearRep& phi, int jobs = 1);

/// Restriction of a verified representation of L(A) to U_{-1}, with anchor
/// -rho(Abar). Verifies the in-algebra anchor identity and the generalized
/// laws; throws ConstructionError on failure.
GenRep phi_restrict(const GradedLieAlgebra& L, const StructureAlgebra& A,
                    const LinearRep& rho);

/// No proper nonzero subspace invariant under the images and the anchor,
/// decided over the rationals: Burnside dimension shortcut, coordinate and
/// dual orbits, common kernels, and kernel seeds of singular elements of the
/// generated associative algebra (including rational eigenvalue shifts).
bool is_irreducible(const GenRep& r);

/// An invertible f with f pi(x) = nu(x) f for all basis x and
/// f a = b f; nullopt if none is found.
std::optional<Matrix> are_equivalent(const GenRep& r1, const GenRep& r2);

/// Invertible solution of f * from[i] = to[i] * f for all i; building block
/// for equivalence of plain and generalized representations.
std::optional<Matrix> intertwiner(const std::vector<Matrix>& from,
                                  const std::vector<Matrix>& to, std::size_t dim_from,
                                  std::size_t dim_to);

}  // namespace jla
