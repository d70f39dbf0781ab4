#pragma once

#include "webflat/foliation.hpp"

namespace webflat {

// Does the projective map with matrix M preserve the foliation?  Exact test:
// the pullback is componentwise proportional to the original saturated form.
bool preserves(const HomogForm& H, const Mat3F& M);

// Dimension of the isotropy Lie algebra: solutions X in gl(3) of
// L_X(Omega) ^ Omega = 0, minus the radial direction (always a solution).
int isotropy_lie_dimension(const HomogForm& H);

// Dimension of the solution space itself (radial included).
int isotropy_solution_dimension(const HomogForm& H);

int orbit_dimension(const HomogForm& H);  // 8 - isotropy_lie_dimension

// pullback(G, M) proportional to F: M is an explicit conjugacy witness.
bool conjugacy_witness_check(const HomogForm& F, const HomogForm& G, const Mat3F& M);

}  // namespace webflat
