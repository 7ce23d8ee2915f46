// Verifiable properties of the kernel grid: linking, exact images,
// the reverse-direction criterion, distributivity of the vanishing
// parts, dimension bounds, properness and monotonicity.
#pragma once

#include "chainlls/kernel.hpp"

namespace chainlls {

// phi images of kernels land in kernels, along every edge in both
// directions.
CheckReport check_prop_linking(const KernelGrid& kg);

// Exactness in the forward direction: for each cell (i, l),
//   the up move of component 2 sends K_il onto K_(i-1,l-1) cap {X1,X3 parts zero},
//   the down move of component 1 sends K_il onto K_(i-1,l) cap {X1 part zero},
//   the down move of component 3 sends K_il onto K_(i,l-1) cap {X3 part zero},
// whenever the edge exists.
CheckReport check_prop_forward_exact(const KernelGrid& kg);

// Reverse-direction criterion: the up move of component 1 from (i-1, l)
// fails to fill K_il cap {X2,X3 parts zero} exactly when i-1 is an order
// of V_X2 at A but not an order of V_X2(-lB) at A; dually for component 3
// from (i, l-1) with the roles of the nodes swapped.
CheckReport check_prop_reverse(const KernelGrid& kg);

// The three vanishing parts of each K_il distribute: for every labeling
// {q1,q2,q3} = {1,2,3},
//   K^(Xq1,0) cap (K^(Xq2,0) + K^(Xq3,0)) = (K^(Xq1,0) cap K^(Xq2,0)) + (K^(Xq1,0) cap K^(Xq3,0)).
// Random subspace triples fail this; these particular triples must not.
CheckReport check_distributivity(const KernelGrid& kg);

// dim(K^(Xq1,0) + K^(Xq2,0)) >= dim K - 1 for q1 != q2, and
// dim K^(X1,0) + dim K^(X2,0) + dim K^(X3,0) >= 2 (dim K - 1).
CheckReport check_dim_inequalities(const KernelGrid& kg);

// Equality in the three-term bound holds iff i is an order of V_X2(-lB)
// at A and l is an order of V_X2(-iA) at B; in that case all three
// vanishing parts are proper subspaces of K_il.
CheckReport check_properness(const KernelGrid& kg);

// dim K_il is nondecreasing in i and in l.
CheckReport check_monotonicity(const KernelGrid& kg);

// The direct kernel dimension equals the case-formula prediction from
// the vanishing sequences at every grid point.
CheckReport check_dim_prediction(const KernelGrid& kg);

// Convenience: all checks above concatenated.
std::vector<CheckReport> run_all_checks(const KernelGrid& kg);

}  // namespace chainlls
