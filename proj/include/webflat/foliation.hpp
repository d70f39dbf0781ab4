#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "webflat/linalg.hpp"
#include "webflat/mpoly.hpp"

namespace webflat {

// Affine 1-form A dx + B dy, saturated: gcd(A, B) = 1, not both zero.
struct PolyOneForm {
  MPoly A, B;

  static PolyOneForm from_parts(MPoly A, MPoly B);  // divides out gcd
  static PolyOneForm parse(const std::string& text);
  int degree() const;  // degree of the defining foliation
  std::string str() const;
  bool operator==(const PolyOneForm& o) const { return A == o.A && B == o.B; }
};

// Homogeneous a dx + b dy + c dz with x a + y b + z c = 0, gcd(a,b,c) = 1,
// coefficients of equal degree d+1.
struct HomogForm {
  MPoly a, b, c;
  int d = 0;

  static HomogForm make(MPoly a, MPoly b, MPoly c);  // checks Euler + saturation
  std::string str() const;
  // Componentwise proportionality over the field (same foliation).
  bool proportional_to(const HomogForm& o) const;
};

HomogForm homogenize(const PolyOneForm& w);
PolyOneForm dehomogenize(const HomogForm& H, char chart);  // 'x' | 'y' | 'z'

struct ProjPoint {
  std::array<FieldElement, 3> c;

  static ProjPoint make(FieldElement x, FieldElement y, FieldElement z);
  bool operator==(const ProjPoint& o) const { return c == o.c; }
  std::string str() const;
};

struct ProjLine {
  std::array<FieldElement, 3> c;  // the line c0*x + c1*y + c2*z = 0

  static ProjLine make(FieldElement a, FieldElement b, FieldElement cc);
  static ProjLine through(const ProjPoint& p, const ProjPoint& q);
  bool contains(const ProjPoint& p) const;
  MPoly equation() const;
  bool operator==(const ProjLine& o) const { return c == o.c; }
  std::string str() const;
};

// Two linearly independent points spanning the line.
std::array<ProjPoint, 2> points_on(const ProjLine& L);

HomogForm pullback(const HomogForm& H, const Mat3F& M);  // SingularMatrix
std::array<MPoly, 3> raw_pullback(const std::array<MPoly, 3>& comps, const Mat3P& M);

// Chart form: the foliation in the affine chart axis=1, local coordinates
// renamed to (x, y); M is the pullback matrix realizing the chart, i.e. the
// returned pair is dehomogenize(pullback(H, M), 'z').
struct ChartForm {
  PolyOneForm form;
  Mat3F M;
};
ChartForm chart_form(const HomogForm& H, int axis);

struct SingularPoint {
  ProjPoint p;
  int nu = 0;
  int mu = 0;
};

struct SingularData {
  std::vector<SingularPoint> points;  // points with coordinates in the field
  // Conjugate singular points at infinity whose directions solve an
  // irreducible factor outside the field, counted exactly and certified
  // nondegenerate (mu = 1 each) by a Jacobian gcd test.
  int cluster_points = 0;
  bool certificate = false;  // mu_sum == d^2 + d + 1 with everything certified
  int mu_sum = 0;            // found Milnor numbers plus certified cluster mass
  int unresolved = 0;        // roots neither recognized nor certified
  int total_count() const { return static_cast<int>(points.size()) + cluster_points; }
};

SingularData singular_points(const HomogForm& H);

bool is_invariant_line(const HomogForm& H, const ProjLine& L);
std::vector<ProjLine> invariant_lines(const HomogForm& H);  // d >= 1

// All linear factors of a homogeneous polynomial that are defined over the
// field, found by solving the coefficient system of an undetermined line.
std::vector<ProjLine> field_line_factors(const MPoly& D);

struct VectorFieldRep {
  MPoly E, F, G;  // Z = E dx + F dy + G dz as a vector field
};
VectorFieldRep vector_field_rep(const HomogForm& H);  // NotEuler
MPoly apply_field(const VectorFieldRep& Z, const MPoly& h);

struct Divisor {
  std::vector<std::pair<ProjLine, int>> line_components;
  MPoly residual;
  MPoly total;
  int degree() const { return total.degree_in_vars({"x", "y", "z"}); }
  int invariant_degree() const;
};

Divisor inflection_divisor(const HomogForm& H);  // d >= 1
bool is_convex(const HomogForm& H);

// Common zeros of two bivariate polynomials over the field, by resultant
// elimination + numeric isolation + recognition + exact verification.
struct CommonZeros {
  std::vector<std::pair<FieldElement, FieldElement>> points;
  int unresolved = 0;
};
CommonZeros common_zeros(const MPoly& A, const MPoly& B, const std::string& vx,
                         const std::string& vy);

}  // namespace webflat
