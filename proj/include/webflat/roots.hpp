#pragma once

#include <complex>
#include <vector>

#include "webflat/mpoly.hpp"

namespace webflat {

// Numeric roots of a univariate complex polynomial (Aberth-Ehrlich on the
// squarefree input).  Coefficients in increasing degree order.
std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> coeffs);

struct FieldRoots {
  std::vector<FieldElement> roots;  // exact, verified by substitution
  int unrecognized = 0;             // numeric roots outside Q(zeta_12) reach
};

// Exact roots of a univariate polynomial over the field: squarefree reduction,
// numeric isolation, recognize(), then exact verification.
FieldRoots field_roots(const MPoly& f, const std::string& var, long denom_bound = 60);

}  // namespace webflat
