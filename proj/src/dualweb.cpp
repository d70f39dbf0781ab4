#include "webflat/dualweb.hpp"

#include <algorithm>

#include "webflat/errors.hpp"

namespace webflat {

namespace {

// x^i y^j  ->  w^{sel} * s^{clear - i - j} with sel = i (UnitA) or j (UnitB);
// this is the substitution x -> w/s, y -> 1/s (resp. x -> 1/s, y -> w/s)
// with denominators cleared to s^clear.
MPoly unit_substitute(const MPoly& f, bool slope_on_x, int clear, const MPoly& s) {
  MPoly out;
  MPoly w = MPoly::variable("w");
  for (const auto& [k, cs] : f.coeffs_in("x")) {
    for (const auto& [j, c] : cs.coeffs_in("y")) {
      int i = k;
      int spow = clear - i - j;
      if (spow < 0) fail("BadArgument", "unit_substitute: clearing power too small");
      MPoly term = c * w.pow(slope_on_x ? i : j) * s.pow(spow);
      out += term;
    }
  }
  return out;
}

}  // namespace

const char* chart_name(DualChart chart) {
  switch (chart) {
    case DualChart::kSlopeIntercept: return "slope";
    case DualChart::kUnitA: return "unitA";
    case DualChart::kUnitB: return "unitB";
  }
  return "?";
}

DualChart chart_from_name(const std::string& name) {
  if (name == "slope") return DualChart::kSlopeIntercept;
  if (name == "unitA" || name == "unita") return DualChart::kUnitA;
  if (name == "unitB" || name == "unitb") return DualChart::kUnitB;
  fail("UnknownChart", "unknown dual chart '" + name + "'");
}

std::string ImplicitWebEq::str() const {
  int d = F.degree_in("w");
  std::string out;
  for (int k = d; k >= 0; --k) {
    MPoly c = F.coeff_of("w", k);
    if (c.is_zero()) continue;
    std::string piece;
    std::string wpow = k == 0 ? "" : (k == 1 ? "w" : "w^" + std::to_string(k));
    if (k == 0) {
      piece = c.str();
    } else if (c == MPoly(1)) {
      piece = wpow;
    } else if (c == MPoly(-1)) {
      piece = "-" + wpow;
    } else if (c.term_count() == 1) {
      piece = c.str() + "*" + wpow;
    } else {
      piece = "(" + c.str() + ")*" + wpow;
    }
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += piece;
    else
      out += "+" + piece;
  }
  return out.empty() ? "0" : out;
}

namespace {

// Shared reduction: primitive part over (p, q), optional exact (p*w - q)
// factors, then the squarefree part in w; every removed factor is logged.
ImplicitWebEq reduce_web_impl(MPoly T, bool strip_incidence) {
  if (T.is_zero()) fail("DegenerateDual", "web equation vanishes identically");
  ImplicitWebEq web;
  MPoly s = MPoly::variable("p") * MPoly::variable("w") - MPoly::variable("q");
  for (int guard = 0; guard < 100; ++guard) {
    bool changed = false;
    MPoly cont;
    for (const auto& [k, c] : T.coeffs_in("w")) {
      cont = MPoly::gcd(cont, c);
      if (!cont.is_zero() && cont.is_constant()) break;
    }
    if (!cont.is_constant()) {
      T = MPoly::exact_div(T, cont);
      web.removed.push_back(cont);
      changed = true;
    }
    while (strip_incidence) {
      auto quo = MPoly::try_exact_div(T, s);
      if (!quo) break;
      T = *quo;
      web.removed.push_back(s);
      changed = true;
    }
    MPoly g = MPoly::gcd(T, T.derivative("w"));
    if (g.degree_in("w") > 0) {
      T = MPoly::exact_div(T, g);
      web.removed.push_back(g);
      changed = true;
    }
    if (!changed) break;
  }
  web.F = T;
  return web;
}

}  // namespace

ImplicitWebEq reduce_web(MPoly F) { return reduce_web_impl(std::move(F), false); }

ImplicitWebEq legendre(const PolyOneForm& form, DualChart chart) {
  int d = form.degree();
  if (d < 1) fail("BadArgument", "legendre requires a foliation of degree >= 1");
  MPoly p = MPoly::variable("p"), q = MPoly::variable("q"), w = MPoly::variable("w");
  MPoly s = p * w - q;
  MPoly T;
  switch (chart) {
    case DualChart::kSlopeIntercept: {
      std::map<std::string, MPoly> sub{{"x", w}, {"y", s}};
      T = form.A.substitute(sub) + p * form.B.substitute(sub);
      break;
    }
    case DualChart::kUnitA:
      T = q * unit_substitute(form.A, true, d + 1, s) +
          p * unit_substitute(form.B, true, d + 1, s);
      break;
    case DualChart::kUnitB:
      T = p * unit_substitute(form.A, false, d + 1, s) +
          q * unit_substitute(form.B, false, d + 1, s);
      break;
  }
  ImplicitWebEq web = reduce_web_impl(std::move(T), true);
  if (web.F.degree_in("w") != d)
    fail("DegenerateDual",
         "w-degree dropped to " + std::to_string(web.F.degree_in("w")) + " (expected " +
             std::to_string(d) + ") in chart " + chart_name(chart));
  return web;
}

MPoly discriminant_w(const ImplicitWebEq& W) {
  int d = W.slope_degree();
  MPoly res = resultant(W.F, W.F.derivative("w"), "w");
  MPoly a0 = W.coeff(d);
  MPoly disc = MPoly::exact_div(res, a0);
  bool negate = (d * (d - 1) / 2) % 2 == 1;
  return negate ? -disc : disc;
}

HenautParts henaut_parts(const ImplicitWebEq& W) {
  if (W.slope_degree() != 3) fail("NotAThreeWeb", "henaut_parts requires w-degree 3");
  MPoly a0 = W.coeff(3), a1 = W.coeff(2), a2 = W.coeff(1), a3 = W.coeff(0);
  MPoly z;
  auto dp = [](const MPoly& f) { return f.derivative("p"); };
  auto dq = [](const MPoly& f) { return f.derivative("q"); };
  MPoly R = det({{a0, a1, a2, a3, z},
                 {z, a0, a1, a2, a3},
                 {MPoly(3) * a0, MPoly(2) * a1, a2, z, z},
                 {z, MPoly(3) * a0, MPoly(2) * a1, a2, z},
                 {z, z, MPoly(3) * a0, MPoly(2) * a1, a2}});
  if (R.is_zero()) fail("ZeroResultant", "web equation is not reduced");
  MPoly alpha1 = det({{dq(a0), a0, -a0, z, z},
                      {dp(a0) + dq(a1), a1, z, MPoly(-2) * a0, z},
                      {dp(a1) + dq(a2), a2, a2, -a1, MPoly(-3) * a0},
                      {dp(a2) + dq(a3), a3, MPoly(2) * a3, z, MPoly(-2) * a1},
                      {dp(a3), z, z, a3, -a2}});
  MPoly alpha2 = det({{z, dq(a0), -a0, z, z},
                      {a0, dp(a0) + dq(a1), z, MPoly(-2) * a0, z},
                      {a1, dp(a1) + dq(a2), a2, -a1, MPoly(-3) * a0},
                      {a2, dp(a2) + dq(a3), MPoly(2) * a3, z, MPoly(-2) * a1},
                      {a3, dp(a3), z, a3, -a2}});
  return HenautParts{std::move(R), std::move(alpha1), std::move(alpha2)};
}

MPoly curvature_numerator_raw(const ImplicitWebEq& W) {
  HenautParts h = henaut_parts(W);
  return (h.alpha1.derivative("q") - h.alpha2.derivative("p")) * h.R -
         (h.alpha1 * h.R.derivative("q") - h.alpha2 * h.R.derivative("p"));
}

Curvature2Form curvature(const ImplicitWebEq& W) {
  HenautParts h = henaut_parts(W);
  MPoly num = (h.alpha1.derivative("q") - h.alpha2.derivative("p")) * h.R -
              (h.alpha1 * h.R.derivative("q") - h.alpha2 * h.R.derivative("p"));
  return Curvature2Form{RatFunc(num, h.R * h.R)};
}

bool web_flat(const ImplicitWebEq& W) { return curvature_numerator_raw(W).is_zero(); }

bool is_flat(const PolyOneForm& form) {
  if (form.degree() != 3) fail("BadArgument", "is_flat requires a degree-3 foliation");
  bool have = false;
  bool verdict = false;
  for (DualChart chart :
       {DualChart::kUnitA, DualChart::kUnitB, DualChart::kSlopeIntercept}) {
    ImplicitWebEq web;
    try {
      web = legendre(form, chart);
    } catch (const ComputationError& e) {
      if (e.code() == "DegenerateDual") continue;
      throw;
    }
    bool flat = web_flat(web);
    if (have && flat != verdict)
      fail("ChartDisagreement", "flatness verdicts differ between dual charts");
    have = true;
    verdict = flat;
  }
  if (!have) fail("DegenerateDual", "all dual charts are degenerate");
  return verdict;
}

MPoly curvature_numerator_coeff(const ImplicitWebEq& W, int i, int j) {
  // K * Delta^2 = N / a0^2 since R = a0 * Delta up to sign.
  MPoly N = curvature_numerator_raw(W);
  MPoly a0 = W.coeff(W.slope_degree());
  MPoly P = MPoly::exact_div(N, a0 * a0);
  return P.coeff_of2("p", i, "q", j);
}

}  // namespace webflat
