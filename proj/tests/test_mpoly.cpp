#include <complex>
#include <random>

#include "doctest.h"
#include "webflat/errors.hpp"
#include "webflat/mpoly.hpp"
#include "webflat/parser.hpp"

using namespace webflat;

namespace {

MPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int deg,
                  int nterms) {
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> expd(0, deg);
  MPoly f;
  for (int t = 0; t < nterms; ++t) {
    int c = coef(rng);
    if (c == 0) continue;
    MPoly term{FieldElement(c)};
    int budget = deg;
    for (const auto& v : vars) {
      int e = expd(rng) % (budget + 1);
      budget -= e;
      if (e > 0) term *= MPoly::variable(v).pow(e);
    }
    f += term;
  }
  return f;
}

const MPoly X = MPoly::variable("x");
const MPoly Y = MPoly::variable("y");

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK((X + Y) * (X - Y) == X * X - Y * Y);
  CHECK((X + Y).pow(0) == MPoly(1));
  CHECK((X * MPoly()).is_zero());
  CHECK(parse_poly("(x+y)*(x-y)") == parse_poly("x^2-y^2"));
}

TEST_CASE("derivatives") {
  CHECK(parse_poly("x^3*y").derivative("x") == parse_poly("3*x^2*y"));
  CHECK(parse_poly("q*w^3+c*w+1").derivative("q") == parse_poly("w^3"));
  CHECK(parse_poly("5").derivative("x").is_zero());
}

TEST_CASE("exact division") {
  CHECK(MPoly::exact_div(parse_poly("x^2-y^2"), parse_poly("x-y")) == parse_poly("x+y"));
  MPoly f = parse_poly("x^4-3*x*y+7");
  CHECK(MPoly::exact_div(f, MPoly(1)) == f);
  MPoly s = parse_poly("p*w-q");
  MPoly g = parse_poly("p*w^3-1");
  CHECK(MPoly::exact_div(s * g, s) == g);
  CHECK_THROWS_AS(MPoly::exact_div(parse_poly("x^2+1"), parse_poly("x+1")),
                  ComputationError);
  CHECK(MPoly::divides(parse_poly("x+y"), parse_poly("x^2-y^2")));
  CHECK(!MPoly::divides(parse_poly("x+2*y"), parse_poly("x^2-y^2")));
}

TEST_CASE("gcd basics") {
  MPoly g = MPoly::gcd(parse_poly("x^2-y^2"), parse_poly("x^2+2*x*y+y^2"));
  CHECK(g == parse_poly("x+y"));
  MPoly f = parse_poly("2*x^2-2*y^2");
  CHECK(MPoly::gcd(f, MPoly()) == f.normalized_monic());
  CHECK(MPoly::gcd(parse_poly("y^3-y"), parse_poly("x^3-x")) == MPoly(1));
  CHECK(MPoly::gcd(parse_poly("x*y"), parse_poly("x^2")) == parse_poly("x"));
}

TEST_CASE("gcd multiplicativity property") {
  std::mt19937 rng(23);
  std::vector<std::string> vars{"x", "y", "z"};
  int done = 0;
  while (done < 12) {
    MPoly f = random_poly(rng, vars, 3, 3);
    MPoly g = random_poly(rng, vars, 3, 3);
    MPoly h = random_poly(rng, vars, 2, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    ++done;
    MPoly lhs = MPoly::gcd(f * h, g * h);
    MPoly rhs = (MPoly::gcd(f, g) * h).normalized_monic();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("determinants") {
  std::vector<std::vector<MPoly>> id5(5, std::vector<MPoly>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) id5[i][j] = MPoly(i == j ? 1 : 0);
  CHECK(det(id5) == MPoly(1));

  auto a = MPoly::variable("a0");
  auto b = MPoly::variable("a1");
  auto c = MPoly::variable("a2");
  auto d = MPoly::variable("a3");
  CHECK(det({{a, b}, {c, d}}) == a * d - b * c);
}

TEST_CASE("bareiss agrees with cofactor expansion") {
  std::mt19937 rng(31);
  std::vector<std::string> vars{"x", "y"};
  for (int it = 0; it < 6; ++it) {
    std::vector<std::vector<MPoly>> m(4, std::vector<MPoly>(4));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, vars, 2, 2);
    // cofactor expansion along the first row by hand
    MPoly expected;
    for (int j = 0; j < 4; ++j) {
      std::vector<std::vector<MPoly>> sub;
      for (int i = 1; i < 4; ++i) {
        std::vector<MPoly> row;
        for (int k = 0; k < 4; ++k)
          if (k != j) row.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(k)]);
        sub.push_back(row);
      }
      MPoly t = m[0][static_cast<size_t>(j)] * det(sub);
      expected = (j % 2 == 0) ? expected + t : expected - t;
    }
    CHECK(det(m) == expected);
  }
}

TEST_CASE("resultants") {
  MPoly w = MPoly::variable("w");
  MPoly a = MPoly::variable("a0");
  MPoly b = MPoly::variable("a1");
  CHECK(resultant(w - a, w - b, "w") == a - b);
  CHECK(resultant(parse_poly("w^2-x"), parse_poly("w-y"), "w") == parse_poly("y^2-x"));
  CHECK_THROWS_AS(resultant(parse_poly("x+1"), parse_poly("y"), "w"), ComputationError);
}

TEST_CASE("paper R-matrix equals the sylvester resultant") {
  // web q w^3 + c w + 1: coefficients a0=q, a1=0, a2=c, a3=1
  MPoly q = MPoly::variable("q");
  MPoly c = MPoly::variable("c");
  MPoly zero, one(1), three(3), two(2);
  std::vector<std::vector<MPoly>> R = {
      {q, zero, c, one, zero},
      {zero, q, zero, c, one},
      {three * q, zero, c, zero, zero},
      {zero, three * q, zero, c, zero},
      {zero, zero, three * q, zero, c}};
  MPoly detR = det(R);
  MPoly expected = parse_poly("q^2*(4*c^3+27*q)");
  CHECK(detR == expected);  // sign fixed by the (q,c)=(1,1) sample: 31 > 0
  CHECK(detR.eval({{"q", FieldElement(1)}, {"c", FieldElement(1)}}) == FieldElement(31));
  MPoly F = parse_poly("q*w^3+c*w+1");
  CHECK(resultant(F, F.derivative("w"), "w") == detR);
}

TEST_CASE("resultant vanishes exactly on common w-factors") {
  std::mt19937 rng(41);
  std::vector<std::string> vars{"w", "x"};
  int done = 0;
  while (done < 14) {
    MPoly f = random_poly(rng, vars, 3, 3);
    MPoly g = random_poly(rng, vars, 3, 3);
    if (f.degree_in("w") == 0 || g.degree_in("w") == 0) continue;
    ++done;
    MPoly r = resultant(f, g, "w");
    bool common = MPoly::gcd(f, g).degree_in("w") > 0;
    CHECK(r.is_zero() == common);
  }
}

TEST_CASE("valuation and jets") {
  CHECK(parse_poly("x^3-y^4").valuation({"x", "y"}) == 3);
  CHECK(parse_poly("x^3+x^2*y+y^5").jet({"x", "y"}, 3) == parse_poly("x^3+x^2*y"));
  MPoly f = parse_poly("eps^4*(x+1)");
  CHECK(f.valuation({"eps"}) == 4);
  CHECK_THROWS_AS(MPoly().valuation({"x"}), ComputationError);
}

TEST_CASE("evaluation commutes with arithmetic") {
  std::mt19937 rng(57);
  std::vector<std::string> vars{"x", "y", "z"};
  std::uniform_real_distribution<double> pt(-1.2, 1.2);
  for (int it = 0; it < 10; ++it) {
    MPoly f = random_poly(rng, vars, 4, 4);
    MPoly g = random_poly(rng, vars, 4, 4);
    std::map<std::string, std::complex<double>> at;
    for (const auto& v : vars) at[v] = {pt(rng), pt(rng)};
    auto lhs = (f * g + f).eval_complex(at);
    auto rhs = f.eval_complex(at) * g.eval_complex(at) + f.eval_complex(at);
    CHECK(std::abs(lhs - rhs) < 1e-8 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("substitution") {
  MPoly f = parse_poly("x^2+y");
  MPoly g = f.substitute({{"x", parse_poly("y+1")}});
  CHECK(g == parse_poly("y^2+3*y+1"));
  CHECK(f.eval_partial({{"x", FieldElement(2)}}) == parse_poly("y+4"));
}

TEST_CASE("canonical rendering") {
  CHECK(parse_poly("q*w^3+c*w+1").str() == "q*w^3+c*w+1");
  CHECK(parse_poly("c-q").str() == "c-q");
  CHECK(parse_poly("-4*c^3*q-27*q^2").str() == "-4*c^3*q-27*q^2");
  CHECK(MPoly().str() == "0");
  CHECK(parse_poly("(-3+i*r3)*x").str() == "(-3+i*r3)*x");
  CHECK(parse_poly("2*i*x").str() == "2*i*x");
  // round trip
  MPoly f = parse_poly("x^4-3/2*x*y+7-i*y^2");
  CHECK(parse_poly(f.str()) == f);
}

TEST_CASE("rational function reduction") {
  MPoly num = parse_poly("x^2-y^2");
  MPoly den = parse_poly("x+y");
  RatFunc r(num * MPoly(2), den * MPoly(2));
  CHECK(r.num() == parse_poly("x-y"));
  CHECK(r.den() == MPoly(1));
  RatFunc z(MPoly(), parse_poly("x"));
  CHECK(z.is_zero());
  CHECK_THROWS_AS(RatFunc(parse_poly("x"), MPoly()), ComputationError);
  // normalized denominator is monic in graded-lex
  RatFunc k(parse_poly("x"), parse_poly("2*y+2"));
  CHECK(k.den() == parse_poly("y+1"));
  CHECK(k.num() == parse_poly("1/2*x"));
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(parse_poly("x+"), SyntaxError);
  try {
    parse_poly("x+");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
    CHECK(!e.expected().empty());
  }
  CHECK_THROWS_AS(parse_poly("d(x)"), SyntaxError);
  CHECK_THROWS_AS(parse_oneform_parts("dx+"), SyntaxError);
  try {
    parse_oneform_parts("dx+");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("one-form parsing") {
  auto parts = parse_oneform_parts("(x^3-x)*dy-(y^3-y)*dx");
  CHECK(parts.A == parse_poly("y-y^3"));
  CHECK(parts.B == parse_poly("x^3-x"));
  auto w9 = parse_oneform_parts(
      "y^2*((-3+i*r3)*x+2*y)*dx+x^2*((1+i*r3)*x-2*i*r3*y)*dy");
  CHECK(!w9.A.is_zero());
  CHECK(!w9.B.is_zero());
  CHECK_THROWS_AS(parse_oneform_parts("x*dx*dy"), SyntaxError);
  CHECK_THROWS_AS(parse_oneform_parts("x+y"), SyntaxError);
  // implicit multiplication right before differentials
  auto p2 = parse_oneform_parts("y^3 dx - x^3 dy");
  CHECK(p2.A == parse_poly("y^3"));
  CHECK(p2.B == parse_poly("-x^3"));
}
