#include "doctest.h"
#include "webflat/degeneration.hpp"
#include "webflat/dualweb.hpp"
#include "webflat/errors.hpp"
#include "webflat/parser.hpp"

using namespace webflat;

namespace {

HomogForm H_of(const std::string& t) { return homogenize(PolyOneForm::parse(t)); }

MPoly E(const std::string& t) { return parse_poly(t); }

Mat3P prows(std::array<std::array<const char*, 3>, 3> m) {
  Mat3P M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      M[i][j] = parse_poly(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return M;
}

}  // namespace

TEST_CASE("homothety family: Fermat degenerates into H1") {
  HomogForm F3 = H_of("(x^3-x)*dy-(y^3-y)*dx");
  Mat3P phi = prows({{{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "eps"}}});
  // wrong scale reports the actual valuation
  try {
    family_limit(F3, ParamFamily{phi, FieldElement(1), 0});
    CHECK(false);
  } catch (const WrongScaleError& e) {
    CHECK(e.valuation() == 1);
  }
  HomogForm lim = family_limit(F3, ParamFamily{phi, FieldElement(-1), -1});
  HomogForm H1 = H_of("y^3*dx-x^3*dy");
  CHECK(lim.a == H1.a);
  CHECK(lim.b == H1.b);
  CHECK(lim.c == H1.c);
}

TEST_CASE("psi family: Fermat degenerates into H3") {
  HomogForm F3 = H_of("(x^3-x)*dy-(y^3-y)*dx");
  Mat3P psi = prows({{{"1", "-1", "0"}, {"-1", "-1", "2*eps"}, {"1", "1", "0"}}});
  // the sign matches the dehomogenization convention a(x,y,1) = A(x,y)
  auto [lim, exp] = family_limit_auto(F3, psi, FieldElement(Rational(-1, 8)));
  CHECK(exp == -1);
  HomogForm H3 = H_of("y^2*(3*x+y)*dx-x^2*(x+3*y)*dy");
  CHECK(lim.proportional_to(H3));
  CHECK(lim.a == H3.a);
  CHECK(lim.b == H3.b);
  CHECK(lim.c == H3.c);
}

TEST_CASE("sigma family in the chart x=1: Fermat degenerates into F1") {
  HomogForm F3 = H_of("(x^3-x)*dy-(y^3-y)*dx");
  Mat3P sigma = prows({{{"eps", "0", "0"}, {"0", "1", "0"}, {"2*eps", "0", "6*eps^3"}}});
  auto [lim, exp] = family_limit_auto(F3, sigma);
  (void)exp;
  HomogForm F1 = H_of("y^3*dx+x^3*(x*dy-y*dx)");
  CHECK(lim.proportional_to(F1));
}

TEST_CASE("worked example degenerates onto the F1 normal form") {
  HomogForm E1 = H_of("x*dy-y*dx+(y^2+y^3)*dy");
  // affine (x/eps^3, y/eps) is projectively diag(1, eps^2, eps^3)
  Mat3P phi = prows({{{"1", "0", "0"}, {"0", "eps^2", "0"}, {"0", "0", "eps^3"}}});
  auto [lim, exp] = family_limit_auto(E1, phi);
  (void)exp;
  CHECK(lim.proportional_to(H_of("x*dy-y*dx+y^3*dy")));
}

TEST_CASE("degenerate limits are rejected") {
  HomogForm F3 = H_of("(x^3-x)*dy-(y^3-y)*dx");
  Mat3P sing = prows({{{"1", "0", "0"}, {"eps", "0", "0"}, {"0", "0", "1"}}});
  CHECK_THROWS_AS(family_limit(F3, ParamFamily{sing, FieldElement(1), 0}),
                  ComputationError);
}

TEST_CASE("double inflection points") {
  // F2 and F4 admit one, F3 does not
  auto r2 = double_inflection_points(H_of("x^3*dx+y^3*(x*dy-y*dx)"));
  CHECK(!r2.points.empty());
  auto r3 = double_inflection_points(H_of("(x^3-x)*dy-(y^3-y)*dx"));
  CHECK(r3.points.empty());
  auto r4 = double_inflection_points(H_of("(x^3+y^3)*dx+x^3*(x*dy-y*dx)"));
  CHECK(!r4.points.empty());

  // Jouanolou has the double inflection point (0,0) with tangent x = 0
  auto rj = double_inflection_points(H_of("(x^3*y-1)*dx+(y^3-x^4)*dy"));
  bool found = false;
  for (const auto& e : rj.points) {
    if (e.p == ProjPoint::make(FieldElement(0), FieldElement(0), FieldElement(1)) &&
        e.tangent == ProjLine::make(FieldElement(1), FieldElement(0), FieldElement(0)))
      found = true;
  }
  CHECK(found);

  // the no-double-inflection example
  auto rn = double_inflection_points(H_of("dx+(y^2+y^3)*dy"));
  CHECK(rn.points.empty());

  // H2 carries curves of double inflection points; sampling flags incompleteness
  auto rh = double_inflection_points(H_of("x^3*dx-y^3*dy"));
  CHECK(!rh.points.empty());
  CHECK(!rh.complete);
}

TEST_CASE("F1 degeneration suite") {
  // H3 and H1 degenerate into F1
  for (const char* txt : {"y^2*(3*x+y)*dx-x^2*(x+3*y)*dy", "y^3*dx-x^3*dy"}) {
    HomogForm H = H_of(txt);
    auto s = find_f1_point(H);
    REQUIRE(s.has_value());
    HomogForm lim = degeneration_suite_F1(H, *s);
    CHECK(is_convex(lim));
    CHECK(singular_points(lim).points.size() == 2);
    CHECK(is_flat_homog(lim));
  }
  // the worked example has kappa = 2 at its nondegenerate point: hypotheses fail
  HomogForm E1 = H_of("x*dy-y*dx+(y^2+y^3)*dy");
  CHECK(!find_f1_point(E1).has_value());
  CHECK_THROWS_AS(
      degeneration_suite_F1(E1, ProjPoint::make(FieldElement(0), FieldElement(0),
                                                FieldElement(1))),
      ComputationError);
}

TEST_CASE("F2 degeneration suite on Jouanolou") {
  HomogForm J = H_of("(x^3*y-1)*dx+(y^3-x^4)*dy");
  HomogForm lim = degeneration_suite_F2(
      J, ProjPoint::make(FieldElement(0), FieldElement(0), FieldElement(1)),
      ProjLine::make(FieldElement(1), FieldElement(0), FieldElement(0)));
  auto sing = singular_points(lim);
  REQUIRE(sing.points.size() == 1);
  CHECK(sing.points[0].nu == 3);
  CHECK(is_flat_homog(lim));
}
