#include <complex>
#include <random>

#include "doctest.h"
#include "webflat/dualweb.hpp"
#include "webflat/errors.hpp"
#include "webflat/parser.hpp"

using namespace webflat;

namespace {

PolyOneForm form_of(const std::string& t) { return PolyOneForm::parse(t); }

// Affine reparametrization of the base (p, q) of a web carries slopes by a
// Moebius substitution: w -> (Qp + Qq w)/(Pp + Pq w).
ImplicitWebEq reparam(const ImplicitWebEq& W, long a1, long b1, long g1, long a2,
                      long b2, long g2) {
  MPoly p = MPoly::variable("p"), q = MPoly::variable("q"), w = MPoly::variable("w");
  MPoly P = MPoly(a1) * p + MPoly(b1) * q + MPoly(g1);
  MPoly Q = MPoly(a2) * p + MPoly(b2) * q + MPoly(g2);
  int d = W.slope_degree();
  MPoly num = MPoly(a2) + MPoly(b2) * w;
  MPoly den = MPoly(a1) + MPoly(b1) * w;
  MPoly out;
  for (int k = 0; k <= d; ++k) {
    MPoly ck = W.coeff(k);
    if (ck.is_zero()) continue;
    out += ck.substitute({{"p", P}, {"q", Q}}) * num.pow(k) * den.pow(d - k);
  }
  return reduce_web(out);
}

}  // namespace

TEST_CASE("legendre reproduces the three displayed dual equations") {
  // x^3 dx + y^2(c x + y)(x dy - y dx)  --->  q w^3 + c w + 1 = 0
  auto w1 = legendre(form_of("x^3*dx+y^2*(c*x+y)*(x*dy-y*dx)"), DualChart::kUnitA);
  CHECK(w1.F == parse_poly("q*w^3+c*w+1"));
  CHECK(w1.str() == "q*w^3+c*w+1");

  // x^3 dx + y(x + c x y + y^2)(x dy - y dx)  --->  q w^3 + p w^2 + (c-q) w + 1
  auto w2 = legendre(form_of("x^3*dx+y*(x+c*x*y+y^2)*(x*dy-y*dx)"), DualChart::kUnitA);
  CHECK(w2.F == parse_poly("q*w^3+p*w^2+(c-q)*w+1"));
  CHECK(w2.str() == "q*w^3+p*w^2+(c-q)*w+1");

  // y(a0 x^2 + a1 x y + y^2)dx + x^3(x dy - y dx) ---> p w^3 + a1 p w^2 + a0 p w - 1
  auto w3 = legendre(form_of("y*(a0*x^2+a1*x*y+y^2)*dx+x^3*(x*dy-y*dx)"),
                     DualChart::kUnitB);
  CHECK(w3.F == parse_poly("p*w^3+a1*p*w^2+a0*p*w-1"));
  CHECK(w3.str() == "p*w^3+a1*p*w^2+a0*p*w-1");
  // exactly one incidence factor p*w - q was divided out
  int incidence = 0;
  for (const auto& f : w3.removed)
    if (f == parse_poly("p*w-q")) ++incidence;
  CHECK(incidence == 1);
}

TEST_CASE("legendre of the general multiplicity-3 family") {
  auto web = legendre(
      form_of("y*(a0*x^2+a1*x*y+y^2)*dx+x*y*(b0*x+b1*y)*dy+x*(x^2+c1*x*y+c2*y^2)*"
              "(x*dy-y*dx)"),
      DualChart::kUnitB);
  CHECK(web.F ==
        parse_poly("p*w^3+(a1*p+b1*q-c2)*w^2+(a0*p+b0*q-c1)*w-1"));
}

TEST_CASE("degenerate dual chart raises") {
  // The slope-intercept chart of the pencil-free radial family degenerates
  // for no catalog member, so force one artificially: a foliation of degree 1.
  PolyOneForm f = form_of("y*dx+x*dy");
  // legendre works; ask for a web then: degree 1 in w
  auto web = legendre(f, DualChart::kSlopeIntercept);
  CHECK(web.slope_degree() == 1);
}

TEST_CASE("discriminants") {
  auto web = legendre(form_of("x^3*dx+y^2*(c*x+y)*(x*dy-y*dx)"), DualChart::kUnitA);
  CHECK(discriminant_w(web) == parse_poly("-4*c^3*q-27*q^2"));

  ImplicitWebEq w2{parse_poly("w^2-p"), {}};
  CHECK(discriminant_w(w2) == parse_poly("4*p"));

  ImplicitWebEq w3{parse_poly("(w-1)*(w-2)*(w-3)"), {}};
  CHECK(discriminant_w(w3) == MPoly(4));
}

TEST_CASE("henaut parts") {
  // constant-coefficient web: all derivative entries vanish
  ImplicitWebEq par{parse_poly("w^3-1"), {}};
  auto h = henaut_parts(par);
  CHECK(h.alpha1.is_zero());
  CHECK(h.alpha2.is_zero());
  CHECK(!h.R.is_zero());
  CHECK(web_flat(par));

  auto web = legendre(form_of("x^3*dx+y^2*(c*x+y)*(x*dy-y*dx)"), DualChart::kUnitA);
  auto hw = henaut_parts(web);
  CHECK(hw.R == parse_poly("q^2*(4*c^3+27*q)"));

  ImplicitWebEq notcubic{parse_poly("w^2-p"), {}};
  CHECK_THROWS_AS(henaut_parts(notcubic), ComputationError);
}

TEST_CASE("finite-difference oracle for the alpha2 derivative") {
  auto web = legendre(form_of("x^3*dx+y^2*(1*x+y)*(x*dy-y*dx)"), DualChart::kUnitA);
  auto h = henaut_parts(web);
  MPoly da2 = h.alpha2.derivative("p");
  double step = 1e-5;
  auto at = [&](double pv, double qv) {
    return h.alpha2
        .eval_complex({{"p", {pv, 0}}, {"q", {qv, 0}}})
        .real();
  };
  double fd = (at(1.0 + step, 1.0) - at(1.0 - step, 1.0)) / (2 * step);
  double sym = da2.eval_complex({{"p", {1.0, 0}}, {"q", {1.0, 0}}}).real();
  CHECK(std::abs(fd - sym) < 1e-4 * (1.0 + std::abs(sym)));
}

TEST_CASE("curvature closed form: type 1 family") {
  auto web = legendre(form_of("x^3*dx+y^2*(c*x+y)*(x*dy-y*dx)"), DualChart::kUnitA);
  Curvature2Form K = curvature(web);
  RatFunc expected(parse_poly("-4*c^2*(2*c^3+27*q)"),
                   parse_poly("q^2*(4*c^3+27*q)^2"));
  CHECK(K.K == expected);
}

TEST_CASE("curvature closed form: case 6.1") {
  auto web = legendre(form_of("y*(a0*x^2+y^2)*dx+x^3*(x*dy-y*dx)"), DualChart::kUnitB);
  Curvature2Form K = curvature(web);
  RatFunc expected(parse_poly("-48*a0^4*p"), parse_poly("(4*a0^3*p^2+27)^2"));
  CHECK(K.K == expected);
}

TEST_CASE("curvature closed form: case 6.2") {
  auto web =
      legendre(form_of("y*(a0*x^2+3*x*y+y^2)*dx+x^3*(x*dy-y*dx)"), DualChart::kUnitB);
  Curvature2Form K = curvature(web);
  RatFunc expected(
      parse_poly("-12*(a0-3)*(a0^2*(4*a0-9)*p+27*(a0-2))"),
      parse_poly("(a0^2*(4*a0-9)*p^2+54*(a0-2)*p+27)^2"));
  CHECK(K.K == expected);
}

TEST_CASE("flatness boundary of the type 1 family") {
  CHECK(is_flat(form_of("x^3*dx+y^2*(0*x+y)*(x*dy-y*dx)")));
  CHECK(!is_flat(form_of("x^3*dx+y^2*(1*x+y)*(x*dy-y*dx)")));
  CHECK(!is_flat(form_of("x^3*dx+y^2*(-2*x+y)*(x*dy-y*dx)")));
  // omega-bar-5 is flat
  CHECK(is_flat(form_of("y^2*(y*dx+2*x*dy)+x^3*(x*dy-y*dx)")));
}

TEST_CASE("rho coefficients of the K normal form") {
  // type 1: K * Delta^2 = -4c^2(2c^3+27q)
  auto w1 = legendre(form_of("x^3*dx+y^2*(c*x+y)*(x*dy-y*dx)"), DualChart::kUnitA);
  CHECK(curvature_numerator_coeff(w1, 0, 0) == parse_poly("-8*c^5"));
  CHECK(curvature_numerator_coeff(w1, 0, 1) == parse_poly("-108*c^2"));

  // type 2: rho_1^5 = 4
  auto w2 = legendre(form_of("x^3*dx+y*(x+c*x*y+y^2)*(x*dy-y*dx)"), DualChart::kUnitA);
  CHECK(curvature_numerator_coeff(w2, 1, 5) == MPoly(4));

  // case (b0,b1,c1) = (1,0,0): rho_0^5 = 4 c2
  auto g1 = legendre(
      form_of("y*(a0*x^2+a1*x*y+y^2)*dx+x*y*(1*x+0*y)*dy+x*(x^2+0*x*y+c2*y^2)*"
              "(x*dy-y*dx)"),
      DualChart::kUnitB);
  CHECK(curvature_numerator_coeff(g1, 0, 5) == parse_poly("4*c2"));

  // case (b0,b1,c2) = (0,2,0): rho_1^0 = 24 c1^4, rho_1^4 = -256 a0^2,
  // rho_0^4 = 64(14 a1 + 3 a0 c1)
  auto g2 = legendre(
      form_of("y*(a0*x^2+a1*x*y+y^2)*dx+x*y*(2*y)*dy+x*(x^2+c1*x*y)*(x*dy-y*dx)"),
      DualChart::kUnitB);
  CHECK(curvature_numerator_coeff(g2, 1, 0) == parse_poly("24*c1^4"));
  CHECK(curvature_numerator_coeff(g2, 1, 4) == parse_poly("-256*a0^2"));
  CHECK(curvature_numerator_coeff(g2, 0, 4) == parse_poly("64*(14*a1+3*a0*c1)"));
}

TEST_CASE("chart independence of flatness verdicts") {
  for (const char* txt :
       {"(x^3-x)*dy-(y^3-y)*dx", "x^3*dx+y^3*(x*dy-y*dx)", "y^3*dx-x^3*dy"}) {
    PolyOneForm f = form_of(txt);
    std::vector<bool> verdicts;
    for (DualChart chart :
         {DualChart::kSlopeIntercept, DualChart::kUnitA, DualChart::kUnitB}) {
      try {
        verdicts.push_back(web_flat(legendre(f, chart)));
      } catch (const ComputationError& e) {
        if (e.code() != "DegenerateDual") throw;
      }
    }
    REQUIRE(!verdicts.empty());
    for (bool v : verdicts) CHECK(v == verdicts.front());
  }
}

TEST_CASE("flat webs stay flat under affine reparametrization") {
  std::mt19937 rng(91);
  auto web = legendre(form_of("x^3*dx+y^3*(x*dy-y*dx)"), DualChart::kUnitA);
  CHECK(web_flat(web));
  std::uniform_int_distribution<long> c(-2, 2);
  int done = 0;
  while (done < 4) {
    long a1 = c(rng), b1 = c(rng), a2 = c(rng), b2 = c(rng);
    if (a1 * b2 - a2 * b1 == 0) continue;
    ++done;
    auto rw = reparam(web, a1, b1, c(rng), a2, b2, c(rng));
    if (rw.slope_degree() != 3) continue;
    CHECK(web_flat(rw));
  }
}
