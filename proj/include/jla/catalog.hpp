#pragma once

#include "jla/structure_algebra.hpp"

namespace jla {

/// Jordan algebra of n x n matrices under B*C = BC + CB, on the matrix-unit
/// basis e11, e12, ..., enn. Unit is (1/2) * identity.
StructureAlgebra full_matrix_jordan(std::size_t n);

/// Subalgebra of full_matrix_jordan(n) on symmetric matrices: basis e_pp and
/// f_pq = e_pq + e_qp (p < q); dim n(n+1)/2.
StructureAlgebra symmetric_matrix_jordan(std::size_t n);

/// Spin factor: basis {e, u_1..u_m}, e the unit, u_i*u_j = delta_ij * e.
StructureAlgebra spin_factor(std::size_t m);

/// Semidirect sum of A and a zero-product ideal V: x*y as in A, u*v = 0,
/// x*v = v*x = phi(x)v, extended bilinearly. phi holds one V x V matrix per
/// basis vector of A. A unit is attached when one exists.
StructureAlgebra semidirect_sum(const StructureAlgebra& A, const std::vector<Matrix>& phi,
                                std::size_t v_dim);

/// The maps x -> L_x on the space of A itself (the adjoint Jacobson
/// representation of A).
std::vector<Matrix> adjoint_maps(const StructureAlgebra& A);

/// Structure constants of the subalgebra spanned by the given (independent)
/// coordinate vectors inside parent; throws ConstructionError when the span
/// is not closed under the product.
StructureAlgebra restrict_to_subalgebra(const StructureAlgebra& parent,
                                        const std::vector<Vec>& basis,
                                        std::vector<std::string> names = {});

}  // namespace jla
