#pragma once

#include "jla/structure_algebra.hpp"

namespace jla {

// Verification sweeps, each in two variants: a plain serial reference and an
// OpenMP kernel. The public check_* entry points dispatch on the jobs count;
// the variants stay exposed so tests can compare them and the bench tool can
// time them against each other.

CheckResult jacobi_sweep_serial(const StructureAlgebra& a);
CheckResult jacobi_sweep_parallel(const StructureAlgebra& a, int jobs);

CheckResult jordan_sweep_serial(const StructureAlgebra& a);
CheckResult jordan_sweep_parallel(const StructureAlgebra& a, int jobs);

/// c_{ij}^k = -c_{ji}^k for all i,j,k (serial; cheap).
CheckResult antisymmetry_scan(const StructureAlgebra& a);

}  // namespace jla
