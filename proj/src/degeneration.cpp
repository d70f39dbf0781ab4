#include "webflat/degeneration.hpp"

#include <algorithm>

#include "webflat/dualweb.hpp"
#include "webflat/errors.hpp"
#include "webflat/localinv.hpp"
#include "webflat/roots.hpp"

namespace webflat {

namespace {

const std::vector<std::string> kXY{"x", "y"};

int eps_valuation(const std::array<MPoly, 3>& comps) {
  int v = -1;
  for (const auto& f : comps) {
    if (f.is_zero()) continue;
    int fv = f.valuation({"eps"});
    v = (v < 0) ? fv : std::min(v, fv);
  }
  if (v < 0) fail("DegenerateLimit", "pullback vanished identically");
  return v;
}

}  // namespace

HomogForm family_limit(const HomogForm& H, const ParamFamily& fam) {
  if (fam.phi.det().is_zero())
    fail("SingularMatrix", "family matrix has identically zero determinant");
  if (fam.scale_coeff.is_zero()) fail("BadArgument", "zero scale coefficient");
  auto raw = raw_pullback({H.a, H.b, H.c}, fam.phi);
  int v = eps_valuation(raw);
  if (v + fam.scale_exp != 0) throw WrongScaleError(v);
  MPoly epsv = MPoly::variable("eps").pow(v);
  std::array<MPoly, 3> limit;
  for (int i = 0; i < 3; ++i) {
    const MPoly& f = raw[static_cast<size_t>(i)];
    if (f.is_zero()) continue;
    MPoly g = MPoly::exact_div(f, epsv).eval_partial({{"eps", FieldElement(0)}});
    limit[static_cast<size_t>(i)] = g.scaled(fam.scale_coeff);
  }
  if (limit[0].is_zero() && limit[1].is_zero() && limit[2].is_zero())
    fail("DegenerateLimit", "limit form is identically zero");
  HomogForm L = HomogForm::make(limit[0], limit[1], limit[2]);
  if (L.d != H.d)
    fail("DegenerateLimit", "limit degree " + std::to_string(L.d) +
                                " differs from the family degree " + std::to_string(H.d));
  return L;
}

std::pair<HomogForm, int> family_limit_auto(const HomogForm& H, const Mat3P& phi,
                                            const FieldElement& coeff) {
  ParamFamily fam{phi, coeff, 0};
  try {
    return {family_limit(H, fam), 0};
  } catch (const WrongScaleError& e) {
    fam.scale_exp = -e.valuation();
    return {family_limit(H, fam), fam.scale_exp};
  }
}

bool is_flat_homog(const HomogForm& H) {
  for (char chart : {'z', 'x', 'y'}) {
    PolyOneForm f = dehomogenize(H, chart);
    if (f.degree() != H.d) continue;
    return is_flat(f);
  }
  fail("DegenerateDual", "no affine chart preserves the degree");
}

namespace {

// det(v, w) for plane vector fields given as coefficient pairs.
MPoly det2(const MPoly& v1, const MPoly& v2, const MPoly& w1, const MPoly& w2) {
  return v1 * w2 - v2 * w1;
}

struct LineContactData {
  MPoly P1, P2, P3;  // successive contact conditions of the tangent line
};

// Contact of the leaf tangent line: with v = X(m) frozen, P_k(m) =
// det(D^k X[v,...,v], v); the tangency order at a regular point is 1 + the
// first k with P_k(m) != 0.
LineContactData line_contact_polys(const MPoly& X1, const MPoly& X2) {
  auto dx = [](const MPoly& f) { return f.derivative("x"); };
  auto dy = [](const MPoly& f) { return f.derivative("y"); };
  MPoly D1_1 = X1 * dx(X1) + X2 * dy(X1);
  MPoly D1_2 = X1 * dx(X2) + X2 * dy(X2);
  auto second = [&](const MPoly& f) {
    return X1 * X1 * dx(dx(f)) + MPoly(2) * X1 * X2 * dy(dx(f)) + X2 * X2 * dy(dy(f));
  };
  auto third = [&](const MPoly& f) {
    return X1.pow(3) * dx(dx(dx(f))) + MPoly(3) * X1 * X1 * X2 * dy(dx(dx(f))) +
           MPoly(3) * X1 * X2 * X2 * dy(dy(dx(f))) + X2.pow(3) * dy(dy(dy(f)));
  };
  LineContactData out;
  out.P1 = det2(D1_1, D1_2, X1, X2);
  out.P2 = det2(second(X1), second(X2), X1, X2);
  out.P3 = det2(third(X1), third(X2), X1, X2);
  return out;
}

}  // namespace

DoubleInflectionResult double_inflection_points(const HomogForm& H) {
  if (H.d != 3) fail("BadArgument", "double inflection points require degree 3");
  DoubleInflectionResult res;
  // Invariant lines are only needed to strip positive-dimensional components;
  // when the singular locus escapes the field (Jouanolou), proceed without.
  std::vector<ProjLine> inv_lines;
  bool have_lines = false;
  auto ensure_lines = [&]() {
    if (have_lines) return;
    have_lines = true;
    try {
      inv_lines = invariant_lines(H);
    } catch (const ComputationError& e) {
      if (e.code() != "IncompleteSingularLocus") throw;
      res.complete = false;
    }
  };
  auto add_point = [&](const ProjPoint& p, const ProjLine& t) {
    for (const auto& e : res.points)
      if (e.p == p) return;
    res.points.push_back({p, t});
  };
  for (int axis : {2, 0, 1}) {
    ChartForm cf = chart_form(H, axis);
    MPoly X1 = -cf.form.B, X2 = cf.form.A;
    LineContactData lc = line_contact_polys(X1, X2);
    if (lc.P1.is_zero()) continue;  // should not happen for d = 3
    auto to_global = [&](const FieldElement& x0, const FieldElement& y0) {
      std::array<FieldElement, 3> v{};
      for (int i = 0; i < 3; ++i)
        v[static_cast<size_t>(i)] =
            cf.M[i][0] * x0 + cf.M[i][1] * y0 + cf.M[i][2];
      return ProjPoint::make(v[0], v[1], v[2]);
    };
    auto verify_and_add = [&](const FieldElement& x0, const FieldElement& y0) {
      std::map<std::string, FieldElement> at{{"x", x0}, {"y", y0}};
      FieldElement v1 = X1.eval(at), v2 = X2.eval(at);
      if (v1.is_zero() && v2.is_zero()) return;  // singular point
      if (!lc.P1.eval(at).is_zero() || !lc.P2.eval(at).is_zero()) return;
      if (lc.P3.eval(at).is_zero()) return;  // invariant or deeper contact
      ProjPoint p = to_global(x0, y0);
      // tangent line through m with direction X(m)
      std::array<FieldElement, 3> dirv{};
      for (int i = 0; i < 3; ++i)
        dirv[static_cast<size_t>(i)] = cf.M[i][0] * v1 + cf.M[i][1] * v2;
      ProjPoint dir = ProjPoint::make(dirv[0], dirv[1], dirv[2]);
      add_point(p, ProjLine::through(p, dir));
    };
    MPoly G = MPoly::gcd(lc.P1, lc.P2);
    MPoly P1r = lc.P1, P2r = lc.P2;
    if (!G.is_constant()) {
      P1r = MPoly::exact_div(lc.P1, G);
      P2r = MPoly::exact_div(lc.P2, G);
    }
    // isolated candidates
    if (!P1r.is_constant() && !P2r.is_constant()) {
      auto cz = common_zeros(P1r, P2r, "x", "y");
      for (const auto& [x0, y0] : cz.points) verify_and_add(x0, y0);
      if (cz.unresolved > 0) res.complete = false;
    }
    // positive-dimensional components of the common factor: strip invariant
    // lines, then sample what remains with coordinate slices
    if (!G.is_constant()) {
      ensure_lines();
      MPoly Gres = G;
      for (const auto& L : inv_lines) {
        const char* names[3] = {"x", "y", "z"};
        std::map<std::string, MPoly> sub;
        for (int i = 0; i < 3; ++i) {
          MPoly img;
          for (int j = 0; j < 3; ++j)
            img += MPoly(cf.M[i][j]) * MPoly::variable(names[j]);
          sub[names[i]] = img;
        }
        MPoly leq =
            L.equation().substitute(sub).eval_partial({{"z", FieldElement(1)}});
        if (leq.is_zero() || leq.is_constant()) continue;
        while (true) {
          auto q = MPoly::try_exact_div(Gres, leq);
          if (!q) break;
          Gres = *q;
        }
      }
      if (!Gres.is_constant()) {
        res.complete = false;  // a curve of double inflection points
        for (long k : {0L, 1L, -1L, 2L, -2L, 3L}) {
          for (const std::string& fixed : {std::string("x"), std::string("y")}) {
            MPoly slice = Gres.eval_partial({{fixed, FieldElement(k)}});
            std::string other = (fixed == "x") ? "y" : "x";
            if (slice.is_zero() || slice.is_constant()) continue;
            auto fr = field_roots(slice, other);
            for (const auto& r : fr.roots) {
              FieldElement x0 = (fixed == "x") ? FieldElement(k) : r;
              FieldElement y0 = (fixed == "x") ? r : FieldElement(k);
              verify_and_add(x0, y0);
            }
          }
        }
      }
    }
  }
  std::sort(res.points.begin(), res.points.end(),
            [](const DoubleInflectionPoint& a, const DoubleInflectionPoint& b) {
              return a.p.str() < b.p.str();
            });
  return res;
}

std::optional<ProjPoint> find_f1_point(const HomogForm& H) {
  SingularData sing = singular_points(H);
  for (const auto& sp : sing.points) {
    if (sp.mu != 1) continue;
    LocalInvariants inv = local_invariants(H, sp.p);
    if (inv.bb && *inv.bb == FieldElement(4) && inv.kappa == 3) return sp.p;
  }
  return std::nullopt;
}

namespace {

// Matrix sending the chart line {x = 0} (resp. the pair m -> origin) onto the
// given local line alpha*x + beta*y = 0 through the origin.
Mat3F local_line_to_x0(const FieldElement& alpha, const FieldElement& beta) {
  // columns: (direction off the line, direction along the line, origin)
  Mat3F N = Mat3F::identity();
  FieldElement off_x = alpha.is_zero() ? FieldElement(0) : FieldElement(1);
  FieldElement off_y = alpha.is_zero() ? FieldElement(1) : FieldElement(0);
  // column 1: any direction with alpha*x+beta*y != 0; column 2: (-beta, alpha)
  N[0][0] = off_x;
  N[1][0] = off_y;
  N[0][1] = -beta;
  N[1][1] = alpha;
  N[2][0] = FieldElement(0);
  N[2][1] = FieldElement(0);
  N[0][2] = FieldElement(0);
  N[1][2] = FieldElement(0);
  N[2][2] = FieldElement(1);
  if (N.det().is_zero()) fail("BadArgument", "degenerate line rotation");
  return N;
}

Mat3P scaling_family(int ex, int ey) {
  Mat3P D;
  D[0][0] = MPoly::variable("eps").pow(ex);
  D[1][1] = MPoly::variable("eps").pow(ey);
  D[2][2] = MPoly(1);
  return D;
}

}  // namespace

HomogForm degeneration_suite_F1(const HomogForm& H, const ProjPoint& s) {
  LocalInvariants inv = local_invariants(H, s);
  if (inv.mu != 1)
    fail("HypothesisViolated", "F1 degeneration requires a nondegenerate point");
  if (!inv.bb || *inv.bb != FieldElement(4))
    fail("HypothesisViolated", "F1 degeneration requires BB = 4");
  if (inv.kappa != 3) fail("HypothesisViolated", "F1 degeneration requires kappa = 3");
  auto L = kappa_line(H, s);
  if (!L)
    fail("UnverifiableOverField",
         "no kappa-realizing line with slope in Q(zeta_12) found");
  Localization loc = localize(H, s);
  // local equation of L: alpha x + beta y (+ 0, since s lies on L)
  const char* names[3] = {"x", "y", "z"};
  std::map<std::string, MPoly> sub;
  for (int i = 0; i < 3; ++i) {
    MPoly img;
    for (int j = 0; j < 3; ++j) img += MPoly(loc.M[i][j]) * MPoly::variable(names[j]);
    sub[names[i]] = img;
  }
  MPoly leq = L->equation().substitute(sub).eval_partial({{"z", FieldElement(1)}});
  FieldElement alpha = leq.coeff_of("x", 1).constant_value();
  FieldElement beta = leq.coeff_of("y", 1).constant_value();
  Mat3F N = local_line_to_x0(alpha, beta);
  Mat3P total = mat3_to_poly(loc.M * N) * scaling_family(3, 1);
  auto [limit, exp] = family_limit_auto(H, total);
  (void)exp;
  SingularData sing = singular_points(limit);
  if (!is_convex(limit) || sing.points.size() != 2)
    fail("NotF1Limit", "limit is not convex with exactly two singular points");
  return limit;
}

HomogForm degeneration_suite_F2(const HomogForm& H, const ProjPoint& m,
                                const ProjLine& tangent) {
  if (!tangent.contains(m))
    fail("BadArgument", "tangent line does not pass through the point");
  // Verify the double-inflection data (r = s = 0, beta != 0) in adapted
  // coordinates along the way.
  auto pts = points_on(tangent);
  ProjPoint p2 = (pts[0] == m) ? pts[1] : pts[0];
  ProjPoint p1 = ProjPoint::make(FieldElement(1), FieldElement(0), FieldElement(0));
  for (int i = 0; i < 3; ++i) {
    std::array<FieldElement, 3> e{FieldElement(i == 0 ? 1 : 0),
                                  FieldElement(i == 1 ? 1 : 0),
                                  FieldElement(i == 2 ? 1 : 0)};
    FieldElement v = tangent.c[0] * e[0] + tangent.c[1] * e[1] + tangent.c[2] * e[2];
    if (!v.is_zero()) {
      p1 = ProjPoint{e};
      break;
    }
  }
  Mat3F M;
  for (int i = 0; i < 3; ++i) {
    M[i][0] = p1.c[static_cast<size_t>(i)];
    M[i][1] = p2.c[static_cast<size_t>(i)];
    M[i][2] = m.c[static_cast<size_t>(i)];
  }
  HomogForm G = pullback(H, M);
  PolyOneForm f = dehomogenize(G, 'z');
  // m must be regular with tangent x = 0, and omega ^ dx restricted to x = 0
  // must be beta y^3 dy ^ dx (r = s = 0, beta != 0).
  if (f.A.eval({{"x", FieldElement(0)}, {"y", FieldElement(0)}}).is_zero())
    fail("NotDoubleInflection", "adapted point is singular");
  MPoly rest = f.B.eval_partial({{"x", FieldElement(0)}});
  if (!rest.coeff_of("y", 0).is_zero() || !rest.coeff_of("y", 1).is_zero() ||
      !rest.coeff_of("y", 2).is_zero() || rest.coeff_of("y", 3).is_zero())
    fail("NotDoubleInflection",
         "restriction to the tangent line is not beta*y^3: " + rest.str());
  Mat3P total = mat3_to_poly(M) * scaling_family(4, 1);
  auto [limit, exp] = family_limit_auto(H, total);
  (void)exp;
  SingularData sing = singular_points(limit);
  if (sing.points.size() != 1 || sing.points[0].nu != 3)
    fail("NotF2Limit", "limit does not have a single multiplicity-3 singularity");
  if (!is_flat_homog(limit)) fail("NotF2Limit", "limit dual web is not flat");
  return limit;
}

}  // namespace webflat
