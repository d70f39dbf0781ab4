#pragma once

#include <string>
#include <vector>

#include "webflat/foliation.hpp"

namespace webflat {

// The three affine charts of the dual plane used in the computations:
//  - SlopeIntercept: the line {y = p*x - q}, slope variable w = x
//  - UnitA:          the line {p*x - q*y = 1}, tangency direction (q, p)
//  - UnitB:          the line {p*y - q*x = 1}, tangency direction (p, q)
enum class DualChart { kSlopeIntercept, kUnitA, kUnitB };

const char* chart_name(DualChart chart);
DualChart chart_from_name(const std::string& name);  // UnknownChart

// Trivariate equation F(p, q, w) of a d-web on the dual plane: reduced
// (squarefree and primitive in w) with w-degree d and nonzero leading
// coefficient.
struct ImplicitWebEq {
  MPoly F;
  std::vector<MPoly> removed;  // factors divided out during reduction

  int slope_degree() const { return F.degree_in("w"); }
  MPoly coeff(int k) const { return F.coeff_of("w", k); }  // w^k coefficient
  std::string str() const;  // collected in descending powers of the slope w
};

// Legendre transform of the foliation in the given chart; DegenerateDual when
// the w-degree drops below deg F after reduction.
ImplicitWebEq legendre(const PolyOneForm& w, DualChart chart);

// Reduce a raw trivariate equation to web hygiene: primitive over (p, q) and
// squarefree in w, logging removed factors.
ImplicitWebEq reduce_web(MPoly F);

// w-discriminant with the sign convention (-1)^{d(d-1)/2} Res_w(F, dF/dw)/a0.
MPoly discriminant_w(const ImplicitWebEq& W);

struct HenautParts {
  MPoly R, alpha1, alpha2;
};

// The resultant R and the two 5x5 determinants of the 3-web curvature
// formula, with base coordinates (p, q).
HenautParts henaut_parts(const ImplicitWebEq& W);  // NotAThreeWeb / ZeroResultant

struct Curvature2Form {
  RatFunc K;  // K dp^dq, reduced with monic denominator
};

// Raw curvature numerator (d_q alpha1 - d_p alpha2) R - (alpha1 d_q R - alpha2 d_p R);
// the curvature is this over R^2, and the web is flat iff it vanishes.
MPoly curvature_numerator_raw(const ImplicitWebEq& W);

Curvature2Form curvature(const ImplicitWebEq& W);

bool web_flat(const ImplicitWebEq& W);

// Flatness of the dual 3-web of a degree-3 foliation: decided in every
// non-degenerate chart, with a cross-chart agreement check.
bool is_flat(const PolyOneForm& w);

// Coefficient of p^i q^j in K * Delta^2 (the rho-coefficients of the
// curvature normal form), as a polynomial in the parameters.
MPoly curvature_numerator_coeff(const ImplicitWebEq& W, int i, int j);

}  // namespace webflat
