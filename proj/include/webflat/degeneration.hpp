#pragma once

#include <optional>
#include <vector>

#include "webflat/foliation.hpp"

namespace webflat {

// phi(eps): matrix of polynomials in eps, det not identically zero; the limit
// is scale_coeff * eps^scale_exp * phi^* Omega at eps = 0.  The exponent must
// cancel the eps-valuation of the raw pullback exactly (WrongScale reports the
// actual valuation otherwise).
struct ParamFamily {
  Mat3P phi;
  FieldElement scale_coeff = FieldElement(1);
  int scale_exp = 0;
};

HomogForm family_limit(const HomogForm& H, const ParamFamily& fam);

// Convenience: derive the exponent from the actual valuation; returns the
// limit together with the exponent used.
std::pair<HomogForm, int> family_limit_auto(const HomogForm& H, const Mat3P& phi,
                                            const FieldElement& coeff = FieldElement(1));

// Flatness of the dual web of a homogeneous-coordinates foliation, computed
// in an affine chart where the degree is preserved.
bool is_flat_homog(const HomogForm& H);

struct DoubleInflectionPoint {
  ProjPoint p;
  ProjLine tangent;
};

struct DoubleInflectionResult {
  std::vector<DoubleInflectionPoint> points;
  // False when a positive-dimensional family of double inflection points was
  // detected and only sampled.
  bool complete = true;
};

DoubleInflectionResult double_inflection_points(const HomogForm& H);  // d = 3

// Singular point satisfying the F1-degeneration hypotheses (mu = 1, BB = 4,
// kappa = 3), if any.
std::optional<ProjPoint> find_f1_point(const HomogForm& H);

// Adapted-coordinates degeneration onto F1: family (eps^3 x, eps y) at s with
// the kappa-line rotated to x = 0; asserts the limit is convex with exactly
// two singular points.
HomogForm degeneration_suite_F1(const HomogForm& H, const ProjPoint& s);

// Adapted-coordinates degeneration onto F2: family (eps^4 x, eps y) at a
// double inflection point; asserts the limit has one singular point of
// algebraic multiplicity 3 and a flat dual web.
HomogForm degeneration_suite_F2(const HomogForm& H, const ProjPoint& m,
                                const ProjLine& tangent);

}  // namespace webflat
