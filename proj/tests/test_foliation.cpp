#include <random>

#include "doctest.h"
#include "webflat/errors.hpp"
#include "webflat/foliation.hpp"
#include "webflat/localinv.hpp"
#include "webflat/parser.hpp"

using namespace webflat;

namespace {

HomogForm H_of(const std::string& text) {
  return homogenize(PolyOneForm::parse(text));
}

ProjLine line(long a, long b, long c) {
  return ProjLine::make(FieldElement(a), FieldElement(b), FieldElement(c));
}

}  // namespace

TEST_CASE("homogenize the pencil of lines") {
  HomogForm H = H_of("x*dy-y*dx");
  CHECK(H.d == 0);
  CHECK(H.a == parse_poly("-y"));
  CHECK(H.b == parse_poly("x"));
  CHECK(H.c.is_zero());
}

TEST_CASE("homogenize the Fermat foliation") {
  HomogForm H = H_of("(x^3-x)*dy-(y^3-y)*dx");
  CHECK(H.d == 3);
  CHECK(H.a == parse_poly("y*z^3-y^3*z"));
  CHECK(H.b == parse_poly("x^3*z-x*z^3"));
  CHECK(H.c == parse_poly("x*y^3-x^3*y"));
  PolyOneForm back = dehomogenize(H, 'z');
  CHECK(back == PolyOneForm::parse("(x^3-x)*dy-(y^3-y)*dx"));
}

TEST_CASE("homogenize H1") {
  HomogForm H = H_of("y^3*dx-x^3*dy");
  CHECK(H.a == parse_poly("y^3*z"));
  CHECK(H.b == parse_poly("-x^3*z"));
  CHECK(H.c == parse_poly("x^3*y-x*y^3"));
}

TEST_CASE("degrees") {
  CHECK(PolyOneForm::parse("x*dy-y*dx").degree() == 0);
  CHECK(PolyOneForm::parse("x^3*dx+y^3*(x*dy-y*dx)").degree() == 3);
  CHECK(PolyOneForm::parse("(x^3*y-1)*dx+(y^3-x^4)*dy").degree() == 3);
}

TEST_CASE("euler relation is preserved by pullback") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coef(-3, 3);
  HomogForm H = H_of("y^3*dx+x^3*(x*dy-y*dx)");
  int tested = 0;
  while (tested < 6) {
    Mat3F M;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M[i][j] = FieldElement(coef(rng));
    if (M.det().is_zero()) continue;
    ++tested;
    HomogForm G = pullback(H, M);  // make() asserts Euler + saturation
    CHECK(G.d == H.d);
    // round trip up to scalar
    HomogForm back = pullback(G, mat3f_inverse(M));
    CHECK(back.proportional_to(H));
  }
}

TEST_CASE("pullback examples") {
  HomogForm H1 = H_of("y^3*dx-x^3*dy");
  Mat3F id = Mat3F::identity();
  CHECK(pullback(H1, id).proportional_to(H1));
  // [y:x:z] preserves H1 (up to sign of the form)
  Mat3F swap;
  swap[0][1] = FieldElement(1);
  swap[1][0] = FieldElement(1);
  swap[2][2] = FieldElement(1);
  CHECK(pullback(H1, swap).proportional_to(H1));
  Mat3F singular;
  CHECK_THROWS_AS(pullback(H1, singular), ComputationError);
}

TEST_CASE("singular points of the Fermat foliation") {
  HomogForm H = H_of("(x^3-x)*dy-(y^3-y)*dx");
  SingularData s = singular_points(H);
  CHECK(s.points.size() == 13);
  CHECK(s.certificate);
  CHECK(s.mu_sum == 13);
  for (const auto& sp : s.points) CHECK(sp.mu == 1);
}

TEST_CASE("singular points of F2") {
  HomogForm H = H_of("x^3*dx+y^3*(x*dy-y*dx)");
  SingularData s = singular_points(H);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].p == ProjPoint::make(FieldElement(0), FieldElement(0), FieldElement(1)));
  CHECK(s.points[0].mu == 13);
  CHECK(s.points[0].nu == 3);
  CHECK(s.certificate);
}

TEST_CASE("singular points of H1") {
  HomogForm H = H_of("y^3*dx-x^3*dy");
  SingularData s = singular_points(H);
  REQUIRE(s.points.size() == 5);
  CHECK(s.certificate);
  int mu9 = 0, mu1 = 0;
  for (const auto& sp : s.points) {
    if (sp.mu == 9) ++mu9;
    if (sp.mu == 1) ++mu1;
  }
  CHECK(mu9 == 1);
  CHECK(mu1 == 4);
}

TEST_CASE("invariant lines") {
  HomogForm F3 = H_of("(x^3-x)*dy-(y^3-y)*dx");
  CHECK(is_invariant_line(F3, line(1, 0, 0)));   // x = 0
  CHECK(is_invariant_line(F3, line(0, 0, 1)));   // z = 0
  CHECK(!is_invariant_line(F3, line(1, 1, 1)));
  auto lines = invariant_lines(F3);
  CHECK(lines.size() == 9);

  HomogForm F2 = H_of("x^3*dx+y^3*(x*dy-y*dx)");
  CHECK(is_invariant_line(F2, line(1, 0, 0)));   // x = 0 invariant
  CHECK(!is_invariant_line(F2, line(0, 1, 0)));  // y = 0 is not
  auto lines2 = invariant_lines(F2);
  REQUIRE(lines2.size() == 1);
  CHECK(lines2[0] == line(1, 0, 0));

  HomogForm F1 = H_of("y^3*dx+x^3*(x*dy-y*dx)");
  CHECK(is_invariant_line(F1, line(1, 0, 0)));
}

TEST_CASE("invariant lines reject the pencil") {
  HomogForm P = H_of("x*dy-y*dx");
  CHECK_THROWS_AS(invariant_lines(P), ComputationError);
}

TEST_CASE("vector field representative identities") {
  for (const char* txt :
       {"x*dy-y*dx", "y^3*dx-x^3*dy", "x^3*dx+y^3*(x*dy-y*dx)",
        "(x^3-x)*dy-(y^3-y)*dx"}) {
    HomogForm H = H_of(txt);
    VectorFieldRep Z = vector_field_rep(H);  // internal identity check throws on failure
    // explicit contraction check: a = z F - y G, b = x G - z E, c = y E - x F
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), z = MPoly::variable("z");
    CHECK(z * Z.F - y * Z.G == H.a);
    CHECK(x * Z.G - z * Z.E == H.b);
    CHECK(y * Z.E - x * Z.F == H.c);
  }
}

TEST_CASE("inflection divisor of the Fermat foliation is the 9 lines") {
  HomogForm F3 = H_of("(x^3-x)*dy-(y^3-y)*dx");
  Divisor D = inflection_divisor(F3);
  CHECK(D.degree() == 9);
  CHECK(D.residual.is_constant());
  CHECK(D.invariant_degree() == 9);
  CHECK(is_convex(F3));
}

TEST_CASE("inflection divisor of F2 has transverse part y^2") {
  HomogForm F2 = H_of("x^3*dx+y^3*(x*dy-y*dx)");
  Divisor D = inflection_divisor(F2);
  CHECK(D.degree() == 9);
  CHECK(D.residual.normalized_monic() == parse_poly("y^2"));
  CHECK(!is_convex(F2));
}

TEST_CASE("H1 is convex") {
  CHECK(is_convex(H_of("y^3*dx-x^3*dy")));
}

TEST_CASE("inflection divisor does not depend on the representative Z") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (const char* txt : {"x^3*dx+y^3*(x*dy-y*dx)", "y^3*dx-x^3*dy"}) {
    HomogForm H = H_of(txt);
    VectorFieldRep Z = vector_field_rep(H);
    MPoly D0 = det({{MPoly::variable("x"), Z.E, apply_field(Z, Z.E)},
                    {MPoly::variable("y"), Z.F, apply_field(Z, Z.F)},
                    {MPoly::variable("z"), Z.G, apply_field(Z, Z.G)}});
    // random homogeneous lambda of degree d-1
    MPoly lam;
    for (int i = 0; i + 0 <= H.d - 1; ++i)
      for (int j = 0; i + j <= H.d - 1; ++j) {
        int k = H.d - 1 - i - j;
        lam += MPoly(FieldElement(coef(rng))) * MPoly::variable("x").pow(i) *
               MPoly::variable("y").pow(j) * MPoly::variable("z").pow(k);
      }
    VectorFieldRep Z2{Z.E + lam * MPoly::variable("x"), Z.F + lam * MPoly::variable("y"),
                      Z.G + lam * MPoly::variable("z")};
    MPoly D1 = det({{MPoly::variable("x"), Z2.E, apply_field(Z2, Z2.E)},
                    {MPoly::variable("y"), Z2.F, apply_field(Z2, Z2.F)},
                    {MPoly::variable("z"), Z2.G, apply_field(Z2, Z2.G)}});
    // identical divisor: equal up to a nonzero constant
    CHECK(!D1.is_zero());
    CHECK((D0.scaled(D1.leading_coeff()) - D1.scaled(D0.leading_coeff())).is_zero());
  }
}
