#include "webflat/localinv.hpp"

#include <algorithm>

#include "webflat/errors.hpp"
#include "webflat/roots.hpp"

namespace webflat {

namespace {

const std::vector<std::string> kXY{"x", "y"};

FieldElement eval_origin(const MPoly& f) {
  return f.eval_partial({{"x", FieldElement(0)}, {"y", FieldElement(0)}})
      .constant_value();
}

int ord_univariate(const MPoly& f, const std::string& v) {
  return f.valuation({v});
}

}  // namespace

Localization localize(const HomogForm& H, const ProjPoint& s) {
  int k = 0;
  while (k < 3 && s.c[static_cast<size_t>(k)].is_zero()) ++k;
  int a = (k + 1) % 3, b = (k + 2) % 3;
  if (a > b) std::swap(a, b);
  Mat3F M;
  M[a][0] = FieldElement(1);
  M[b][1] = FieldElement(1);
  for (int i = 0; i < 3; ++i) M[i][2] = s.c[static_cast<size_t>(i)];
  HomogForm G = pullback(H, M);
  MPoly A = G.a.eval_partial({{"z", FieldElement(1)}});
  MPoly B = G.b.eval_partial({{"z", FieldElement(1)}});
  if (!MPoly::gcd(A, B).is_constant())
    fail("NonIsolated", "localized form has a one-dimensional singular set");
  Localization loc;
  loc.A_form = A;
  loc.B_form = B;
  loc.X = LocalVectorField{-B, A};
  loc.M = M;
  return loc;
}

int alg_multiplicity(const LocalVectorField& X) {
  int va = X.Au.is_zero() ? kTangencyInfinite : X.Au.valuation(kXY);
  int vb = X.Bv.is_zero() ? kTangencyInfinite : X.Bv.valuation(kXY);
  return std::min(va, vb);
}

namespace {

// Intersection multiplicity of (f, g) at the origin by the plane-curve
// axioms: split off recognizable y-factors, otherwise eliminate the leading
// x-coefficient of the restrictions to y = 0.
int intersection_multiplicity(MPoly f, MPoly g) {
  long total = 0;
  MPoly y = MPoly::variable("y");
  for (int guard = 0; guard < 100000; ++guard) {
    if (f.is_zero() || g.is_zero())
      fail("NonIsolated", "intersection multiplicity of a zero polynomial");
    if (!eval_origin(f).is_zero() || !eval_origin(g).is_zero())
      return static_cast<int>(total);
    MPoly a = f.eval_partial({{"y", FieldElement(0)}});
    MPoly b = g.eval_partial({{"y", FieldElement(0)}});
    if (a.is_zero() && b.is_zero())
      fail("NonIsolated", "common factor y through the origin");
    if (a.is_zero()) {
      total += ord_univariate(b, "x");
      f = MPoly::exact_div(f, y);
      continue;
    }
    if (b.is_zero()) {
      total += ord_univariate(a, "x");
      g = MPoly::exact_div(g, y);
      continue;
    }
    int da = a.degree_in("x"), db = b.degree_in("x");
    if (da > db) {
      std::swap(f, g);
      std::swap(a, b);
      std::swap(da, db);
    }
    FieldElement lc_a = a.coeff_of("x", da).constant_value();
    FieldElement lc_b = b.coeff_of("x", db).constant_value();
    MPoly shift = MPoly::variable("x").pow(db - da);
    g = g - MPoly(lc_b / lc_a) * shift * f;
  }
  fail("NonIsolated", "intersection multiplicity did not terminate");
}

}  // namespace

int milnor(const LocalVectorField& X) {
  return intersection_multiplicity(X.Au, X.Bv);
}

namespace {

// Pull the line L into the localized coordinates of loc: a linear form in
// (x, y) vanishing at the origin when s lies on L.
MPoly local_line_equation(const Localization& loc, const ProjLine& L) {
  const char* names[3] = {"x", "y", "z"};
  std::map<std::string, MPoly> sub;
  for (int i = 0; i < 3; ++i) {
    MPoly img;
    for (int j = 0; j < 3; ++j) img += MPoly(loc.M[i][j]) * MPoly::variable(names[j]);
    sub[names[i]] = img;
  }
  MPoly pulled = L.equation().substitute(sub);
  return pulled.eval_partial({{"z", FieldElement(1)}});
}

struct PencilData {
  std::vector<MPoly> c;    // c_k(t): u^k coefficients of (Bv - t*Au)(u, t*u)
  MPoly ginf;              // gcd of all c_k; invariant directions are its roots
  bool all_zero = false;   // every pencil line is invariant
  int u0_order = -1;       // tangency of the line u = 0, -1 when invariant
};

PencilData pencil_data(const LocalVectorField& X) {
  PencilData out;
  MPoly t = MPoly::variable("t");
  MPoly g = (X.Bv - t * X.Au).substitute({{"y", t * MPoly::variable("x")}});
  if (g.is_zero()) {
    out.all_zero = true;
  } else {
    int top = g.degree_in("x");
    for (int k = 0; k <= top; ++k) out.c.push_back(g.coeff_of("x", k));
    for (const auto& ck : out.c) out.ginf = MPoly::gcd(out.ginf, ck);
  }
  MPoly r = X.Au.eval_partial({{"x", FieldElement(0)}});
  out.u0_order = r.is_zero() ? -1 : ord_univariate(r, "y");
  return out;
}

// Strip the invariant-direction roots (roots of ginf) from h.
MPoly strip_invariant_roots(MPoly h, const MPoly& ginf) {
  if (ginf.is_constant()) return h;
  for (int guard = 0; guard < 1000; ++guard) {
    MPoly e = MPoly::gcd(h, ginf);
    if (e.is_constant()) break;
    h = MPoly::exact_div(h, e);
  }
  return h;
}

}  // namespace

int tangency_order(const HomogForm& H, const ProjLine& L, const ProjPoint& s) {
  Localization loc = localize(H, s);
  MPoly f = local_line_equation(loc, L);
  if (!eval_origin(f).is_zero()) return 0;  // s not on L
  FieldElement alpha = f.coeff_of("x", 1).constant_value();
  FieldElement beta = f.coeff_of("y", 1).constant_value();
  MPoly xf = loc.X.Au * MPoly(alpha) + loc.X.Bv * MPoly(beta);
  // Parametrize L by (x, y) = t*(-beta, alpha).
  MPoly t = MPoly::variable("t");
  MPoly g = xf.substitute({{"x", MPoly(-beta) * t}, {"y", MPoly(alpha) * t}});
  if (g.is_zero()) return kTangencyInfinite;
  return ord_univariate(g, "t");
}

std::pair<int, int> tau_kappa(const HomogForm& H, const ProjPoint& s) {
  Localization loc = localize(H, s);
  PencilData pd = pencil_data(loc.X);
  int d = H.d;
  if (pd.all_zero && pd.u0_order < 0)
    fail("BadArgument", "every line through the point is invariant");
  int tau;
  if (pd.all_zero) {
    tau = pd.u0_order;
  } else {
    tau = -1;
    for (size_t k = 0; k < pd.c.size(); ++k)
      if (!pd.c[k].is_zero()) { tau = static_cast<int>(k); break; }
  }
  int kappa = 0;
  if (pd.u0_order >= 0) kappa = pd.u0_order;
  if (!pd.all_zero) {
    for (int K = d; K >= tau && K > kappa; --K) {
      bool listed_all_zero = true;
      MPoly gk;
      for (int k = 0; k < K; ++k) {
        if (k < static_cast<int>(pd.c.size()) && !pd.c[k].is_zero()) {
          listed_all_zero = false;
          gk = MPoly::gcd(gk, pd.c[static_cast<size_t>(k)]);
        }
      }
      if (listed_all_zero) {
        // every direction reaches order >= K; invariant ones are the finitely
        // many roots of a nonzero ginf, so a non-invariant witness exists
        kappa = std::max(kappa, K);
        break;
      }
      if (gk.is_constant()) continue;
      MPoly h = strip_invariant_roots(gk, pd.ginf);
      if (h.degree_in("t") >= 1) {
        kappa = std::max(kappa, K);
        break;
      }
    }
  }
  return {tau, std::max(tau, kappa)};
}

std::optional<ProjLine> kappa_line(const HomogForm& H, const ProjPoint& s) {
  Localization loc = localize(H, s);
  PencilData pd = pencil_data(loc.X);
  auto [tau, kappa] = tau_kappa(H, s);
  auto line_from_dir = [&](const FieldElement& dx, const FieldElement& dy) {
    std::array<FieldElement, 3> v{};
    for (int i = 0; i < 3; ++i)
      v[static_cast<size_t>(i)] = loc.M[i][0] * dx + loc.M[i][1] * dy;
    return ProjLine::through(s, ProjPoint::make(v[0], v[1], v[2]));
  };
  if (pd.u0_order == kappa) return line_from_dir(FieldElement(0), FieldElement(1));
  auto order_at = [&](const FieldElement& t0) -> int {
    for (size_t k = 0; k < pd.c.size(); ++k) {
      if (pd.c[k].is_zero()) continue;
      if (!pd.c[k].eval({{"t", t0}}).is_zero()) return static_cast<int>(k);
    }
    return kTangencyInfinite;  // invariant direction
  };
  // Candidate slopes: roots of the stripped gcd at level kappa, or any
  // non-invariant slope when the first kappa coefficients vanish identically.
  bool listed_all_zero = true;
  MPoly gk;
  for (int k = 0; k < kappa && k < static_cast<int>(pd.c.size()); ++k) {
    if (!pd.c[static_cast<size_t>(k)].is_zero()) {
      listed_all_zero = false;
      gk = MPoly::gcd(gk, pd.c[static_cast<size_t>(k)]);
    }
  }
  std::vector<FieldElement> cands;
  if (listed_all_zero) {
    for (long v : {0L, 1L, -1L, 2L, -2L, 3L}) cands.push_back(FieldElement(v));
  } else {
    MPoly h = strip_invariant_roots(gk, pd.ginf);
    if (h.degree_in("t") >= 1) {
      auto fr = field_roots(h, "t");
      cands = fr.roots;
    }
  }
  for (const auto& t0 : cands)
    if (order_at(t0) == kappa) return line_from_dir(FieldElement(1), t0);
  return std::nullopt;
}

FieldElement baum_bott(const LocalVectorField& X) {
  FieldElement a11 = X.Au.derivative("x").eval_partial({{"x", FieldElement(0)}, {"y", FieldElement(0)}}).constant_value();
  FieldElement a12 = X.Au.derivative("y").eval_partial({{"x", FieldElement(0)}, {"y", FieldElement(0)}}).constant_value();
  FieldElement a21 = X.Bv.derivative("x").eval_partial({{"x", FieldElement(0)}, {"y", FieldElement(0)}}).constant_value();
  FieldElement a22 = X.Bv.derivative("y").eval_partial({{"x", FieldElement(0)}, {"y", FieldElement(0)}}).constant_value();
  FieldElement det = a11 * a22 - a12 * a21;
  if (det.is_zero()) fail("Degenerate", "Baum-Bott requires a nondegenerate point");
  FieldElement tr = a11 + a22;
  return tr * tr / det;
}

FieldElement camacho_sad(const HomogForm& H, const ProjLine& L, const ProjPoint& s) {
  if (!L.contains(s)) fail("BadArgument", "Camacho-Sad: point not on the line");
  if (!is_invariant_line(H, L)) fail("BadArgument", "Camacho-Sad: line not invariant");
  auto pts = points_on(L);
  ProjPoint p1 = (pts[0] == s) ? pts[1] : pts[0];
  // A point off L.
  ProjPoint p2 = ProjPoint::make(FieldElement(1), FieldElement(0), FieldElement(0));
  for (int i = 0; i < 3; ++i) {
    std::array<FieldElement, 3> e{FieldElement(i == 0 ? 1 : 0),
                                  FieldElement(i == 1 ? 1 : 0),
                                  FieldElement(i == 2 ? 1 : 0)};
    FieldElement v = L.c[0] * e[0] + L.c[1] * e[1] + L.c[2] * e[2];
    if (!v.is_zero()) {
      p2 = ProjPoint{e};
      break;
    }
  }
  Mat3F M;
  for (int i = 0; i < 3; ++i) {
    M[i][0] = p1.c[static_cast<size_t>(i)];
    M[i][1] = p2.c[static_cast<size_t>(i)];
    M[i][2] = s.c[static_cast<size_t>(i)];
  }
  HomogForm G = pullback(H, M);
  MPoly A = G.a.eval_partial({{"z", FieldElement(1)}});
  MPoly B = G.b.eval_partial({{"z", FieldElement(1)}});
  // L is now {y = 0}; the d/dy component of X = -B d/dx + A d/dy must vanish
  // along it.
  if (!A.eval_partial({{"y", FieldElement(0)}}).is_zero())
    fail("BadArgument", "Camacho-Sad: adapted line is not invariant");
  FieldElement tangent =
      (-B).derivative("x").eval_partial({{"x", FieldElement(0)}, {"y", FieldElement(0)}}).constant_value();
  FieldElement transverse =
      A.derivative("y").eval_partial({{"x", FieldElement(0)}, {"y", FieldElement(0)}}).constant_value();
  if (tangent.is_zero())
    fail("IndeterminateCS", "linear normal form inapplicable: tangent eigenvalue 0");
  return transverse / tangent;
}

bool jet_saturated(const HomogForm& H, const ProjPoint& s) {
  Localization loc = localize(H, s);
  MPoly ja = loc.A_form.jet(kXY, H.d);
  MPoly jb = loc.B_form.jet(kXY, H.d);
  return MPoly::gcd(ja, jb).is_constant();
}

LocalInvariants local_invariants(const HomogForm& H, const ProjPoint& s) {
  Localization loc = localize(H, s);
  LocalInvariants inv;
  inv.nu = alg_multiplicity(loc.X);
  inv.mu = milnor(loc.X);
  auto tk = tau_kappa(H, s);
  inv.tau = tk.first;
  inv.kappa = tk.second;
  inv.nondegenerate = (inv.mu == 1);
  if (inv.nondegenerate) inv.bb = baum_bott(loc.X);
  if (inv.nu == 1) inv.radial_order = inv.tau - 1;
  return inv;
}

}  // namespace webflat
