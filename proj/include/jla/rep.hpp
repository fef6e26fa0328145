#pragma once

#include "jla/tkk.hpp"

namespace jla {

/// A linear map from an algebra into End(V), given by one square matrix per
/// basis vector.
struct LinearRep {
  std::size_t v_dim = 0;
  std::vector<Matrix> images;
};

LinearRep zero_rep(std::size_t basis_count, std::size_t v_dim);

/// Image of an element with the given coordinates.
Matrix rep_apply(const LinearRep& rep, const Vec& coords);

/// rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) on all basis pairs of a Lie
/// algebra presented by structure constants.
CheckResult check_lie_rep(const StructureAlgebra& lie, const LinearRep& rho, int jobs = 1);

/// ad(b_i) matrices of any structure-constant algebra.
LinearRep adjoint_rep(const StructureAlgebra& alg);

/// The linear extension of (element, image) pairs to a representation of the
/// whole algebra: pairs are saturated under bracketing, checked for
/// consistency, required to span, and the result is verified to be a
/// homomorphism on all basis pairs. Throws ConstructionError otherwise.
LinearRep rep_from_generators(const StructureAlgebra& lie,
                              std::vector<std::pair<Vec, Matrix>> generators,
                              int jobs = 1);

/// The 2v-dimensional block representation of L(A) generated by
/// x -> [[0, phi(x)], [0, 0]] on U_{-1} and [[0,0],[-E,0]] on the
/// multiplication-map element (the defining representation when phi is the
/// identity representation of a matrix Jordan algebra).
LinearRep doubled_block_rep(const GradedLieAlgebra& L, const LinearRep& phi);

}  // namespace jla
