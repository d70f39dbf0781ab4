#include "webflat/foliation.hpp"

#include <algorithm>

#include "webflat/errors.hpp"
#include "webflat/localinv.hpp"
#include "webflat/parser.hpp"
#include "webflat/roots.hpp"

namespace webflat {

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

MPoly gcd3(const MPoly& a, const MPoly& b, const MPoly& c) {
  return MPoly::gcd(MPoly::gcd(a, b), c);
}

std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& u,
                                  const std::array<FieldElement, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

std::array<FieldElement, 3> normalize3(std::array<FieldElement, 3> c,
                                       const char* what) {
  for (auto& e : c) {
    if (e.is_zero()) continue;
    FieldElement inv = e.inverse();
    for (auto& f : c) f = f * inv;
    return c;
  }
  fail("BadArgument", std::string(what) + ": all coordinates are zero");
}

std::string coords_str(const std::array<FieldElement, 3>& c, char open, char close) {
  std::string s(1, open);
  for (int i = 0; i < 3; ++i) {
    if (i) s += ":";
    s += c[static_cast<size_t>(i)].str();
  }
  s += close;
  return s;
}

}  // namespace

PolyOneForm PolyOneForm::from_parts(MPoly A, MPoly B) {
  if (A.is_zero() && B.is_zero())
    fail("BadArgument", "one-form with both coefficients zero");
  MPoly g = MPoly::gcd(A, B);
  if (!g.is_constant()) {
    A = MPoly::exact_div(A, g);
    B = MPoly::exact_div(B, g);
  }
  return PolyOneForm{std::move(A), std::move(B)};
}

PolyOneForm PolyOneForm::parse(const std::string& text) {
  auto parts = parse_oneform_parts(text);
  return from_parts(parts.A, parts.B);
}

int PolyOneForm::degree() const {
  int D = std::max(A.degree_in_vars(kXY), B.degree_in_vars(kXY));
  MPoly top = MPoly::variable("x") * A.homogeneous_part(kXY, D) +
              MPoly::variable("y") * B.homogeneous_part(kXY, D);
  return top.is_zero() ? D - 1 : D;
}

std::string PolyOneForm::str() const {
  return "(" + A.str() + ")*dx+(" + B.str() + ")*dy";
}

HomogForm HomogForm::make(MPoly a, MPoly b, MPoly c) {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    fail("BadArgument", "zero homogeneous form");
  MPoly euler = MPoly::variable("x") * a + MPoly::variable("y") * b +
                MPoly::variable("z") * c;
  if (!euler.is_zero()) fail("NotEuler", "Euler relation x*a+y*b+z*c = 0 fails");
  MPoly g = gcd3(a, b, c);
  if (!g.is_constant()) {
    if (!a.is_zero()) a = MPoly::exact_div(a, g);
    if (!b.is_zero()) b = MPoly::exact_div(b, g);
    if (!c.is_zero()) c = MPoly::exact_div(c, g);
  }
  int deg = -1;
  for (const MPoly* f : {&a, &b, &c}) {
    if (f->is_zero()) continue;
    if (!f->is_homogeneous_in(kXYZ))
      fail("BadArgument", "homogeneous form with non-homogeneous coefficient");
    int dd = f->degree_in_vars(kXYZ);
    if (deg >= 0 && dd != deg)
      fail("BadArgument", "homogeneous coefficients of unequal degree");
    deg = dd;
  }
  if (deg < 1) fail("BadArgument", "homogeneous coefficients must have degree >= 1");
  return HomogForm{std::move(a), std::move(b), std::move(c), deg - 1};
}

std::string HomogForm::str() const {
  return "(" + a.str() + ")*dx+(" + b.str() + ")*dy+(" + c.str() + ")*dz";
}

bool HomogForm::proportional_to(const HomogForm& o) const {
  return (a * o.b - b * o.a).is_zero() && (a * o.c - c * o.a).is_zero() &&
         (b * o.c - c * o.b).is_zero();
}

namespace {

// Promote every term x^i y^j (with parameter factors) to degree `deg` in
// (x, y, z) by the appropriate power of z.
MPoly homogenize_to(const MPoly& f, int deg) {
  MPoly out;
  MPoly z = MPoly::variable("z");
  for (int k = 0; k <= deg; ++k) {
    MPoly hk = f.homogeneous_part(kXY, k);
    if (hk.is_zero()) continue;
    out += hk * z.pow(deg - k);
  }
  return out;
}

}  // namespace

HomogForm homogenize(const PolyOneForm& w) {
  int d = w.degree();
  MPoly a = homogenize_to(w.A, d + 1);
  MPoly b = homogenize_to(w.B, d + 1);
  MPoly xaby = MPoly::variable("x") * a + MPoly::variable("y") * b;
  MPoly c = -MPoly::exact_div(xaby, MPoly::variable("z"));
  return HomogForm::make(std::move(a), std::move(b), std::move(c));
}

PolyOneForm dehomogenize(const HomogForm& H, char chart) {
  MPoly one(1);
  switch (chart) {
    case 'z':
      return PolyOneForm::from_parts(H.a.eval_partial({{"z", FieldElement(1)}}),
                                     H.b.eval_partial({{"z", FieldElement(1)}}));
    case 'x': {
      std::map<std::string, MPoly> sub{{"x", one},
                                       {"y", MPoly::variable("x")},
                                       {"z", MPoly::variable("y")}};
      return PolyOneForm::from_parts(H.b.substitute(sub), H.c.substitute(sub));
    }
    case 'y': {
      std::map<std::string, MPoly> sub{{"x", MPoly::variable("x")},
                                       {"y", one},
                                       {"z", MPoly::variable("y")}};
      return PolyOneForm::from_parts(H.a.substitute(sub), H.c.substitute(sub));
    }
    default:
      fail("BadArgument", "chart must be one of x, y, z");
  }
}

ProjPoint ProjPoint::make(FieldElement x, FieldElement y, FieldElement z) {
  return ProjPoint{normalize3({std::move(x), std::move(y), std::move(z)}, "point")};
}

std::string ProjPoint::str() const { return coords_str(c, '[', ']'); }

ProjLine ProjLine::make(FieldElement a, FieldElement b, FieldElement cc) {
  return ProjLine{normalize3({std::move(a), std::move(b), std::move(cc)}, "line")};
}

ProjLine ProjLine::through(const ProjPoint& p, const ProjPoint& q) {
  auto c = cross(p.c, q.c);
  return ProjLine{normalize3(c, "line through equal points")};
}

bool ProjLine::contains(const ProjPoint& p) const {
  return (c[0] * p.c[0] + c[1] * p.c[1] + c[2] * p.c[2]).is_zero();
}

MPoly ProjLine::equation() const {
  return c[0] * MPoly::variable("x") + c[1] * MPoly::variable("y") +
         c[2] * MPoly::variable("z");
}

std::string ProjLine::str() const { return coords_str(c, '{', '}'); }

std::array<ProjPoint, 2> points_on(const ProjLine& L) {
  std::vector<ProjPoint> pts;
  std::array<std::array<FieldElement, 3>, 3> axes = {
      std::array<FieldElement, 3>{FieldElement(1), FieldElement(0), FieldElement(0)},
      std::array<FieldElement, 3>{FieldElement(0), FieldElement(1), FieldElement(0)},
      std::array<FieldElement, 3>{FieldElement(0), FieldElement(0), FieldElement(1)}};
  for (const auto& e : axes) {
    auto p = cross(L.c, e);
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
    ProjPoint pt{normalize3(p, "point")};
    bool dup = false;
    for (const auto& q : pts) dup = dup || q == pt;
    if (!dup) pts.push_back(pt);
    if (pts.size() == 2) break;
  }
  if (pts.size() < 2) fail("BadArgument", "degenerate line");
  return {pts[0], pts[1]};
}

std::array<MPoly, 3> raw_pullback(const std::array<MPoly, 3>& comps, const Mat3P& M) {
  std::map<std::string, MPoly> sub;
  const char* names[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    MPoly img;
    for (int j = 0; j < 3; ++j) img += M[i][j] * MPoly::variable(names[j]);
    sub[names[i]] = img;
  }
  std::array<MPoly, 3> pulled;
  std::array<MPoly, 3> composed;
  for (int i = 0; i < 3; ++i) composed[static_cast<size_t>(i)] = comps[static_cast<size_t>(i)].substitute(sub);
  for (int j = 0; j < 3; ++j) {
    MPoly acc;
    for (int i = 0; i < 3; ++i) acc += composed[static_cast<size_t>(i)] * M[i][j];
    pulled[static_cast<size_t>(j)] = acc;
  }
  return pulled;
}

HomogForm pullback(const HomogForm& H, const Mat3F& M) {
  if (M.det().is_zero()) fail("SingularMatrix", "pullback by a singular matrix");
  auto raw = raw_pullback({H.a, H.b, H.c}, mat3_to_poly(M));
  return HomogForm::make(raw[0], raw[1], raw[2]);
}

ChartForm chart_form(const HomogForm& H, int axis) {
  Mat3F M;
  // chart axis=1; local homogeneous coords (u, v, w) -> w e_axis + u e_a + v e_b
  int a = (axis + 1) % 3, b = (axis + 2) % 3;
  if (a > b) std::swap(a, b);
  M[a][0] = FieldElement(1);
  M[b][1] = FieldElement(1);
  M[axis][2] = FieldElement(1);
  HomogForm G = pullback(H, M);
  return ChartForm{dehomogenize(G, 'z'), M};
}

CommonZeros common_zeros(const MPoly& A, const MPoly& B, const std::string& vx,
                         const std::string& vy) {
  CommonZeros out;
  if (A.is_zero() || B.is_zero())
    fail("BadArgument", "common_zeros of a zero polynomial");
  if (!MPoly::gcd(A, B).is_constant())
    fail("BadArgument", "common_zeros: arguments share a factor");
  // Candidates for vx.
  std::vector<FieldElement> xs;
  int dyA = A.degree_in(vy), dyB = B.degree_in(vy);
  if (dyA > 0 && dyB > 0) {
    MPoly R = resultant(A, B, vy);
    if (R.is_zero()) fail("BadArgument", "vanishing resultant in common_zeros");
    if (R.is_constant()) return out;  // no affine solutions
    auto fr = field_roots(R, vx);
    xs = fr.roots;
    out.unresolved += fr.unrecognized;
  } else {
    // One argument does not involve vy; its vx-roots bound the candidates.
    const MPoly& f = (dyA == 0) ? A : B;
    if (f.is_constant()) return out;
    auto fr = field_roots(f, vx);
    xs = fr.roots;
    out.unresolved += fr.unrecognized;
  }
  for (const auto& x0 : xs) {
    MPoly A0 = A.eval_partial({{vx, x0}});
    MPoly B0 = B.eval_partial({{vx, x0}});
    std::vector<FieldElement> ys;
    if (A0.is_zero() && B0.is_zero()) {
      fail("BadArgument", "common_zeros: positive-dimensional fiber");
    } else if (A0.is_constant() || B0.is_constant()) {
      const MPoly& g = A0.is_constant() ? A0 : B0;
      if (!g.constant_value().is_zero()) continue;  // no solution on this fiber
      const MPoly& h = A0.is_constant() ? B0 : A0;
      auto fr = field_roots(h, vy);
      ys = fr.roots;
      out.unresolved += fr.unrecognized;
    } else {
      MPoly g = MPoly::gcd(A0, B0);
      if (g.is_constant()) continue;
      auto fr = field_roots(g, vy);
      ys = fr.roots;
      out.unresolved += fr.unrecognized;
    }
    for (const auto& y0 : ys) {
      std::map<std::string, FieldElement> at{{vx, x0}, {vy, y0}};
      if (!A.eval(at).is_zero() || !B.eval(at).is_zero()) continue;
      out.points.emplace_back(x0, y0);
    }
  }
  return out;
}

SingularData singular_points(const HomogForm& H) {
  SingularData out;
  std::vector<ProjPoint> pts;
  // Finite chart z = 1: common zeros of (a, b); by the Euler relation c
  // vanishes there automatically.
  MPoly A = H.a.eval_partial({{"z", FieldElement(1)}});
  MPoly B = H.b.eval_partial({{"z", FieldElement(1)}});
  auto cz = common_zeros(A, B, "x", "y");
  out.unresolved += cz.unresolved;
  for (const auto& [x0, y0] : cz.points)
    pts.push_back(ProjPoint::make(x0, y0, FieldElement(1)));
  // Line at infinity: common roots of the three binary forms.
  MPoly a0 = H.a.eval_partial({{"z", FieldElement(0)}});
  MPoly b0 = H.b.eval_partial({{"z", FieldElement(0)}});
  MPoly c0 = H.c.eval_partial({{"z", FieldElement(0)}});
  MPoly G = gcd3(a0, b0, c0);
  if (G.is_zero()) fail("BadArgument", "foliation vanishes on the infinity line");
  if (!G.is_constant()) {
    MPoly Gslice = G.eval_partial({{"y", FieldElement(1)}});
    if (!Gslice.is_constant()) {
      auto fr = field_roots(Gslice, "x");
      for (const auto& r : fr.roots)
        pts.push_back(ProjPoint::make(r, FieldElement(1), FieldElement(0)));
      if (fr.unrecognized > 0) {
        // Directions outside the field come in conjugate clusters.  Count
        // them exactly via the squarefree factor left after removing the
        // recognized roots, and certify mu = 1 at each by a Jacobian test.
        MPoly g = MPoly::gcd(Gslice, Gslice.derivative("x"));
        MPoly sf = g.is_constant() ? Gslice : MPoly::exact_div(Gslice, g);
        for (const auto& r : fr.roots) {
          MPoly lin = MPoly::variable("x") - MPoly(r);
          sf = MPoly::exact_div(sf, lin);
        }
        int extra = sf.degree_in("x");
        if (extra > 0) {
          PolyOneForm fy = dehomogenize(H, 'y');
          MPoly Xu = -fy.B, Xv = fy.A;
          MPoly jdet = Xu.derivative("x") * Xv.derivative("y") -
                       Xu.derivative("y") * Xv.derivative("x");
          MPoly jd = jdet.eval_partial({{"y", FieldElement(0)}});
          if (!jd.is_zero() && MPoly::gcd(sf, jd).is_constant())
            out.cluster_points += extra;
          else
            out.unresolved += extra;
        }
      }
    }
    if (G.eval({{"x", FieldElement(1)}, {"y", FieldElement(0)}}).is_zero())
      pts.push_back(ProjPoint::make(FieldElement(1), FieldElement(0), FieldElement(0)));
  }
  std::sort(pts.begin(), pts.end(),
            [](const ProjPoint& p, const ProjPoint& q) { return p.str() < q.str(); });
  int musum = 0;
  for (const auto& p : pts) {
    Localization loc = localize(H, p);
    SingularPoint sp;
    sp.p = p;
    sp.nu = alg_multiplicity(loc.X);
    sp.mu = milnor(loc.X);
    musum += sp.mu;
    out.points.push_back(std::move(sp));
  }
  out.mu_sum = musum + out.cluster_points;
  out.certificate = (out.unresolved == 0) && (out.mu_sum == H.d * H.d + H.d + 1);
  return out;
}

bool is_invariant_line(const HomogForm& H, const ProjLine& L) {
  const auto& l = L.c;
  MPoly w1 = l[1] * H.a - l[0] * H.b;  // dx^dy coefficient of omega ^ dL
  MPoly w2 = l[2] * H.a - l[0] * H.c;  // dx^dz
  MPoly w3 = l[2] * H.b - l[1] * H.c;  // dy^dz
  MPoly eq = L.equation();
  return MPoly::divides(eq, w1) && MPoly::divides(eq, w2) && MPoly::divides(eq, w3);
}

std::vector<ProjLine> invariant_lines(const HomogForm& H) {
  if (H.d < 1) fail("BadArgument", "invariant_lines requires degree >= 1");
  SingularData sing = singular_points(H);
  std::vector<ProjLine> candidates;
  auto add = [&](const ProjLine& L) {
    for (const auto& M : candidates)
      if (M == L) return;
    candidates.push_back(L);
  };
  // Complete candidate source: an invariant line divides the inflection
  // determinant, so its field-defined linear factors cover every invariant
  // line even when singular points escape the field.
  {
    VectorFieldRep Z = vector_field_rep(H);
    MPoly D = det({{MPoly::variable("x"), Z.E, apply_field(Z, Z.E)},
                   {MPoly::variable("y"), Z.F, apply_field(Z, Z.F)},
                   {MPoly::variable("z"), Z.G, apply_field(Z, Z.G)}});
    if (!D.is_zero())
      for (const auto& L : field_line_factors(D)) add(L);
  }
  // Lines joining two singular points.
  for (size_t i = 0; i < sing.points.size(); ++i)
    for (size_t j = i + 1; j < sing.points.size(); ++j)
      add(ProjLine::through(sing.points[i].p, sing.points[j].p));
  // Directions allowed by the tangent-cone data at each singular point: an
  // invariant line through s must divide every homogeneous component of the
  // local radial contraction x*A + y*B.
  for (const auto& sp : sing.points) {
    Localization loc = localize(H, sp.p);
    MPoly P = MPoly::variable("x") * loc.A_form + MPoly::variable("y") * loc.B_form;
    if (P.is_zero()) continue;
    MPoly G;
    int top = P.total_degree();
    for (int k = 0; k <= top; ++k) {
      MPoly hk = P.homogeneous_part(kXY, k);
      if (hk.is_zero()) continue;
      G = MPoly::gcd(G, hk);
      if (!G.is_zero() && G.is_constant()) break;
    }
    if (G.is_zero() || G.is_constant()) continue;
    auto dir_line = [&](const FieldElement& dx, const FieldElement& dy) {
      // Local direction (dx, dy) at s lifts through the chart matrix.
      std::array<FieldElement, 3> v{};
      for (int i = 0; i < 3; ++i)
        v[static_cast<size_t>(i)] = loc.M[i][0] * dx + loc.M[i][1] * dy;
      ProjPoint other = ProjPoint::make(v[0], v[1], v[2]);
      if (other == sp.p) return;
      add(ProjLine::through(sp.p, other));
    };
    MPoly Gslice = G.eval_partial({{"y", FieldElement(1)}});
    if (!Gslice.is_constant()) {
      auto fr = field_roots(Gslice, "x");
      for (const auto& r : fr.roots) dir_line(r, FieldElement(1));
    }
    if (G.eval({{"x", FieldElement(1)}, {"y", FieldElement(0)}}).is_zero())
      dir_line(FieldElement(1), FieldElement(0));
  }
  std::vector<ProjLine> out;
  for (const auto& L : candidates)
    if (is_invariant_line(H, L)) out.push_back(L);
  std::sort(out.begin(), out.end(),
            [](const ProjLine& a, const ProjLine& b) { return a.str() < b.str(); });
  return out;
}

namespace {

// Zero set (over the field) of a finite system of bivariate polynomials with
// finitely many common zeros; splits shared factors recursively so that the
// pairwise elimination stays coprime.
std::vector<std::pair<FieldElement, FieldElement>> solve_poly_system(
    std::vector<MPoly> coeffs, const std::string& vb, const std::string& vc,
    int depth = 0) {
  std::vector<std::pair<FieldElement, FieldElement>> out;
  coeffs.erase(std::remove_if(coeffs.begin(), coeffs.end(),
                              [](const MPoly& f) { return f.is_zero(); }),
               coeffs.end());
  if (coeffs.empty() || depth > 6) return out;
  for (const auto& f : coeffs)
    if (f.is_constant()) return out;  // inconsistent system
  if (coeffs.size() == 1) return out;  // a curve of solutions: no isolated ones
  auto verify = [&](const FieldElement& b0, const FieldElement& c0) {
    for (const auto& f : coeffs)
      if (!f.eval({{vb, b0}, {vc, c0}}).is_zero()) return false;
    for (const auto& [pb, pc] : out)
      if (pb == b0 && pc == c0) return false;
    return true;
  };
  MPoly f1 = coeffs[0], f2 = coeffs[1];
  MPoly h = MPoly::gcd(f1, f2);
  if (!h.is_constant()) {
    f1 = MPoly::exact_div(f1, h);
    f2 = MPoly::exact_div(f2, h);
  }
  if (!f1.is_constant() && !f2.is_constant()) {
    auto cz = common_zeros(f1, f2, vb, vc);
    for (const auto& [b0, c0] : cz.points)
      if (verify(b0, c0)) out.emplace_back(b0, c0);
  }
  if (!h.is_constant()) {
    // candidates on the shared component against the rest of the system
    std::vector<MPoly> rest{h};
    for (size_t i = 2; i < coeffs.size(); ++i) rest.push_back(coeffs[i]);
    for (const auto& [b0, c0] : solve_poly_system(rest, vb, vc, depth + 1))
      if (verify(b0, c0)) out.emplace_back(b0, c0);
  }
  return out;
}

}  // namespace

std::vector<ProjLine> field_line_factors(const MPoly& D) {
  std::vector<ProjLine> out;
  if (D.is_zero()) fail("BadArgument", "line factors of the zero polynomial");
  MPoly y = MPoly::variable("y"), z = MPoly::variable("z");
  auto push = [&](FieldElement a, FieldElement b, FieldElement c) {
    ProjLine L = ProjLine::make(std::move(a), std::move(b), std::move(c));
    for (const auto& M : out)
      if (M == L) return;
    if (MPoly::divides(L.equation(), D)) out.push_back(L);
  };
  push(FieldElement(0), FieldElement(0), FieldElement(1));  // z = 0
  push(FieldElement(0), FieldElement(1), FieldElement(0));  // y = 0
  push(FieldElement(1), FieldElement(0), FieldElement(0));  // x = 0
  // y + c z: the substitution y -> -c z must kill D identically.
  {
    MPoly sub = D.substitute({{"y", MPoly(-1) * MPoly::variable("c") * z}});
    MPoly g;
    for (const auto& [k, cx] : sub.coeffs_in("x"))
      for (const auto& [l, cz] : cx.coeffs_in("z")) {
        g = MPoly::gcd(g, cz);
        if (!g.is_zero() && g.is_constant()) break;
      }
    if (!g.is_zero() && !g.is_constant()) {
      auto fr = field_roots(g, "c");
      for (const auto& r : fr.roots) push(FieldElement(0), FieldElement(1), r);
    }
  }
  // x + b y + c z: the coefficient system over (y, z)-monomials must vanish.
  {
    MPoly bx = MPoly::variable("b"), cx = MPoly::variable("c");
    MPoly sub = D.substitute({{"x", MPoly(-1) * (bx * y + cx * z)}});
    std::vector<MPoly> coeffs;
    for (const auto& [k, cy] : sub.coeffs_in("y"))
      for (const auto& [l, cz] : cy.coeffs_in("z"))
        if (!cz.is_zero()) coeffs.push_back(cz);
    for (const auto& [b0, c0] : solve_poly_system(coeffs, "b", "c"))
      push(FieldElement(1), b0, c0);
  }
  std::sort(out.begin(), out.end(),
            [](const ProjLine& a, const ProjLine& b) { return a.str() < b.str(); });
  return out;
}

VectorFieldRep vector_field_rep(const HomogForm& H) {
  MPoly euler = MPoly::variable("x") * H.a + MPoly::variable("y") * H.b +
                MPoly::variable("z") * H.c;
  if (!euler.is_zero()) fail("NotEuler", "Euler relation fails");
  MPoly a0 = H.a.eval_partial({{"z", FieldElement(0)}});
  MPoly z = MPoly::variable("z");
  MPoly h;
  if (!a0.is_zero()) h = MPoly::exact_div(a0, MPoly::variable("y"));
  MPoly G = -h;
  MPoly F = MPoly::exact_div(H.a - MPoly::variable("y") * h, z);
  MPoly E = MPoly::exact_div(-H.b - MPoly::variable("x") * h, z);
  if (MPoly::variable("y") * E - MPoly::variable("x") * F != H.c)
    fail("NotEuler", "vector field representative does not reproduce the form");
  return VectorFieldRep{std::move(E), std::move(F), std::move(G)};
}

MPoly apply_field(const VectorFieldRep& Z, const MPoly& h) {
  return Z.E * h.derivative("x") + Z.F * h.derivative("y") + Z.G * h.derivative("z");
}

int Divisor::invariant_degree() const {
  int s = 0;
  for (const auto& [l, m] : line_components) s += m;
  return s;
}

Divisor inflection_divisor(const HomogForm& H) {
  if (H.d < 1) fail("BadArgument", "inflection divisor requires degree >= 1");
  VectorFieldRep Z = vector_field_rep(H);
  MPoly D = det({{MPoly::variable("x"), Z.E, apply_field(Z, Z.E)},
                 {MPoly::variable("y"), Z.F, apply_field(Z, Z.F)},
                 {MPoly::variable("z"), Z.G, apply_field(Z, Z.G)}});
  Divisor div;
  div.total = D;
  MPoly rest = D;
  for (const auto& L : invariant_lines(H)) {
    MPoly eq = L.equation();
    int mult = 0;
    while (true) {
      auto q = MPoly::try_exact_div(rest, eq);
      if (!q) break;
      rest = *q;
      ++mult;
    }
    if (mult > 0) div.line_components.emplace_back(L, mult);
  }
  div.residual = rest;
  return div;
}

bool is_convex(const HomogForm& H) {
  return inflection_divisor(H).residual.is_constant();
}

}  // namespace webflat
