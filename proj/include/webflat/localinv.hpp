#pragma once

#include <limits>
#include <optional>
#include <utility>

#include "webflat/foliation.hpp"

namespace webflat {

// Germ of the foliation at a singular point, X = Au d/du + Bv d/dv in local
// coordinates named (x, y); gcd(Au, Bv) = 1.
struct LocalVectorField {
  MPoly Au, Bv;
};

// Chart + translation carrying a point to the origin: pullback(H, M) is the
// localized form, with s at [0:0:1] of its z = 1 chart.
struct Localization {
  LocalVectorField X;
  MPoly A_form, B_form;  // local 1-form coefficients (A dx + B dy)
  Mat3F M;
};

Localization localize(const HomogForm& H, const ProjPoint& s);

int alg_multiplicity(const LocalVectorField& X);  // origin must be singular

// Milnor number as the intersection multiplicity of (Au, Bv) at the origin,
// by the axiomatic plane-curve recursion (linear-factor splitting, valuation
// base cases, coefficient elimination in one variable).
int milnor(const LocalVectorField& X);  // NonIsolated

inline constexpr int kTangencyInfinite = std::numeric_limits<int>::max();

// Order of contact of the foliation with the line L at s; kTangencyInfinite
// when L is invariant.
int tangency_order(const HomogForm& H, const ProjLine& L, const ProjPoint& s);

// Generic / maximal tangency order over non-invariant lines through s.
std::pair<int, int> tau_kappa(const HomogForm& H, const ProjPoint& s);

// A line through s realizing kappa, when one exists over Q(zeta_12).
std::optional<ProjLine> kappa_line(const HomogForm& H, const ProjPoint& s);

FieldElement baum_bott(const LocalVectorField& X);  // Degenerate

// Camacho-Sad index of F along the invariant line L at s: ratio of the
// transverse to the tangent eigenvalue of the linear part.
FieldElement camacho_sad(const HomogForm& H, const ProjLine& L, const ProjPoint& s);

// True iff the degree-d jet of the local 1-form at s has unit content.
bool jet_saturated(const HomogForm& H, const ProjPoint& s);

struct LocalInvariants {
  int nu = 0;
  int mu = 0;
  int tau = 0;
  int kappa = 0;
  bool nondegenerate = false;
  std::optional<FieldElement> bb;
  std::optional<int> radial_order;  // present iff nu == 1
};

LocalInvariants local_invariants(const HomogForm& H, const ProjPoint& s);

}  // namespace webflat
