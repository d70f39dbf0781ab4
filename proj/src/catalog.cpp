#include "webflat/catalog.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "webflat/degeneration.hpp"
#include "webflat/dualweb.hpp"
#include "webflat/errors.hpp"
#include "webflat/localinv.hpp"
#include "webflat/symmetry.hpp"

namespace webflat {

namespace {

Mat3F mk(std::array<std::array<FieldElement, 3>, 3> rows) {
  Mat3F M;
  M.m = rows;
  return M;
}

FieldElement fe(long n) { return FieldElement(n); }

// [a1 x + b1 y : a2 x + b2 y : alpha z]
Mat3F plane_map(FieldElement a1, FieldElement b1, FieldElement a2, FieldElement b2,
                FieldElement alpha) {
  return mk({std::array<FieldElement, 3>{a1, b1, fe(0)},
             std::array<FieldElement, 3>{a2, b2, fe(0)},
             std::array<FieldElement, 3>{fe(0), fe(0), alpha}});
}

std::vector<Mat3F> fermat_symmetries() {
  // [+-a : +-b : c] over the six arrangements of (x, y, z) fixing the form
  std::vector<Mat3F> out;
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
  for (const auto& pm : perms) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        Mat3F M;
        M[0][pm[0]] = fe(s1);
        M[1][pm[1]] = fe(s2);
        M[2][pm[2]] = fe(1);
        out.push_back(M);
      }
    }
  }
  return out;
}

std::vector<Mat3F> h11_symmetries() {
  FieldElement xi = FieldElement::zeta_power(1);
  auto xp = [&](long k) { return FieldElement::zeta_power(k); };
  FieldElement a = fe(2);
  std::vector<Mat3F> out;
  out.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), a));
  out.push_back(plane_map(fe(0), fe(1), fe(1), fe(0), a));
  out.push_back(plane_map(xp(5), fe(0), fe(1), xi, a));
  out.push_back(plane_map(xp(-5), fe(0), fe(1), xp(-1), a));
  out.push_back(plane_map(fe(0), xp(5), xi, fe(1), a));
  out.push_back(plane_map(fe(0), xp(-5), xp(-1), fe(1), a));
  out.push_back(plane_map(xp(5), fe(-1), fe(1), xp(-1), a));
  out.push_back(plane_map(xp(-5), fe(-1), fe(1), xi, a));
  out.push_back(plane_map(xp(5), xp(4), fe(1), fe(0), a));
  out.push_back(plane_map(xp(-5), xp(-4), fe(1), fe(0), a));
  out.push_back(plane_map(xp(4), xp(5), fe(0), fe(1), a));
  out.push_back(plane_map(xp(-4), xp(-5), fe(0), fe(1), a));
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  FieldElement j4 = FieldElement::zeta_power(4);  // e^{2 i pi / 3}

  auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };

  auto sixteen = [&](const std::string& name, const std::string& text, bool convex,
                     int orbit, bool homogeneous) {
    CatalogEntry e;
    e.name = name;
    e.form_text = text;
    e.expected.degree = 3;
    e.expected.flat = true;
    e.expected.convex = convex;
    e.expected.orbit_dim = orbit;
    e.expected.homogeneous = homogeneous;
    return e;
  };

  {
    auto e = sixteen("H1", "y^3*dx-x^3*dy", true, 7, true);
    for (int s : {1, -1}) {
      e.generators.push_back(plane_map(fe(s), fe(0), fe(0), fe(1), fe(2)));
      e.generators.push_back(plane_map(fe(0), fe(s), fe(1), fe(0), fe(2)));
    }
    add(e);
  }
  {
    auto e = sixteen("H2", "x^3*dx-y^3*dy", false, 7, true);
    FieldElement i = FieldElement::i();
    for (int s : {1, -1}) {
      e.generators.push_back(plane_map(fe(s), fe(0), fe(0), fe(1), fe(2)));
      e.generators.push_back(plane_map(fe(0), fe(s), fe(1), fe(0), fe(2)));
      e.generators.push_back(plane_map(fe(s) * i, fe(0), fe(0), fe(1), fe(2)));
      e.generators.push_back(plane_map(fe(0), fe(s) * i, fe(1), fe(0), fe(2)));
    }
    e.expected.double_inflection = true;
    add(e);
  }
  {
    auto e = sixteen("H3", "y^2*(3*x+y)*dx-x^2*(x+3*y)*dy", true, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    e.generators.push_back(plane_map(fe(0), fe(1), fe(1), fe(0), fe(2)));
    add(e);
  }
  {
    auto e = sixteen("H4", "y^2*(3*x+y)*dx+x^2*(x+3*y)*dy", false, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    e.generators.push_back(plane_map(fe(0), fe(1), fe(1), fe(0), fe(2)));
    e.expected.double_inflection = true;
    add(e);
  }
  {
    auto e = sixteen("H5", "2*y^3*dx+x^2*(3*y-2*x)*dy", false, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    add(e);
  }
  {
    auto e = sixteen("H6", "(4*x^3-6*x^2*y+4*y^3)*dx+x^2*(3*y-2*x)*dy", false, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    e.expected.double_inflection = true;
    add(e);
  }
  {
    auto e = sixteen("H7", "y^3*dx+x*(3*y^2-x^2)*dy", false, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    e.generators.push_back(plane_map(fe(-1), fe(0), fe(0), fe(1), fe(2)));
    add(e);
  }
  {
    auto e = sixteen("H8", "x*(x^2-3*y^2)*dx-4*y^3*dy", false, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    e.generators.push_back(plane_map(fe(-1), fe(0), fe(0), fe(1), fe(2)));
    e.expected.double_inflection = true;
    add(e);
  }
  {
    auto e = sixteen("H9", "y^2*((-3+i*r3)*x+2*y)*dx+x^2*((1+i*r3)*x-2*i*r3*y)*dy",
                     false, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    e.generators.push_back(plane_map(fe(1), fe(-1), fe(1), fe(0), fe(2)));
    e.generators.push_back(plane_map(fe(0), fe(1), fe(-1), fe(1), fe(2)));
    add(e);
  }
  {
    auto e = sixteen("H10", "(3*x+r3*y)*y^2*dx+(3*y-r3*x)*x^2*dy", false, 7, true);
    e.generators.push_back(plane_map(fe(1), fe(0), fe(0), fe(1), fe(2)));
    e.generators.push_back(plane_map(fe(0), fe(-1), fe(1), fe(0), fe(2)));
    add(e);
  }
  {
    auto e = sixteen("H11",
                     "(3*x^3+3*r3*x^2*y+3*x*y^2+r3*y^3)*dx+"
                     "(r3*x^3+3*x^2*y+3*r3*x*y^2+3*y^3)*dy",
                     false, 7, true);
    e.generators = h11_symmetries();
    add(e);
  }
  {
    auto e = sixteen("F1", "y^3*dx+x^3*(x*dy-y*dx)", true, 6, false);
    e.expected.n_sing = 2;
    e.expected.radial_order2 = true;
    e.expected.double_inflection = false;
    e.expected.points.push_back(
        {ProjPoint::make(fe(0), fe(0), fe(1)), 3, 12, std::nullopt});
    e.expected.points.push_back({ProjPoint::make(fe(0), fe(1), fe(0)), 1, 1, fe(4)});
    // [alpha^2 x : alpha^3 y : z + beta x]
    e.generators.push_back(mk({std::array<FieldElement, 3>{fe(4), fe(0), fe(0)},
                               std::array<FieldElement, 3>{fe(0), fe(8), fe(0)},
                               std::array<FieldElement, 3>{fe(1), fe(0), fe(1)}}));
    e.generators.push_back(mk({std::array<FieldElement, 3>{fe(1), fe(0), fe(0)},
                               std::array<FieldElement, 3>{fe(0), fe(1), fe(0)},
                               std::array<FieldElement, 3>{fe(3), fe(0), fe(1)}}));
    add(e);
  }
  {
    auto e = sixteen("F2", "x^3*dx+y^3*(x*dy-y*dx)", false, 6, false);
    e.expected.n_sing = 1;
    e.expected.radial_order2 = false;
    e.expected.double_inflection = true;
    e.expected.points.push_back(
        {ProjPoint::make(fe(0), fe(0), fe(1)), 3, 13, std::nullopt});
    // [alpha^4 x : alpha^3 y : z + beta x]
    e.generators.push_back(mk({std::array<FieldElement, 3>{fe(16), fe(0), fe(0)},
                               std::array<FieldElement, 3>{fe(0), fe(8), fe(0)},
                               std::array<FieldElement, 3>{fe(1), fe(0), fe(1)}}));
    add(e);
  }
  {
    auto e = sixteen("F3", "(x^3-x)*dy-(y^3-y)*dx", true, 8, false);
    e.expected.n_sing = 13;
    e.expected.radial_order2 = true;
    e.expected.double_inflection = false;
    e.generators = fermat_symmetries();
    add(e);
  }
  {
    auto e = sixteen("F4", "(x^3+y^3)*dx+x^3*(x*dy-y*dx)", false, 7, false);
    e.expected.n_sing = 2;
    e.expected.radial_order2 = true;
    e.expected.double_inflection = true;
    // [j^k x : y : z + alpha x], j = e^{2 i pi/3}
    for (int k : {0, 1, 2}) {
      Mat3F M;
      M[0][0] = j4.pow(k);
      M[1][1] = fe(1);
      M[2][0] = fe(1);
      M[2][2] = fe(1);
      e.generators.push_back(M);
    }
    add(e);
  }
  {
    auto e = sixteen("F5", "y^2*(y*dx+2*x*dy)+x^3*(x*dy-y*dx)", false, 7, false);
    e.expected.n_sing = 2;
    e.expected.radial_order2 = false;
    e.expected.double_inflection = false;
    // [alpha^2 x : alpha^3 y : z]
    Mat3F M;
    M[0][0] = fe(4);
    M[1][1] = fe(8);
    M[2][2] = fe(1);
    e.generators.push_back(M);
    add(e);
  }

  // Normal forms with one singular point of algebraic multiplicity 3
  // (symbolic parameters; inputs to the flatness-boundary computations).
  auto parametric = [&](const std::string& name, const std::string& text) {
    CatalogEntry e;
    e.name = name;
    e.form_text = text;
    e.parametric = true;
    add(e);
  };
  parametric("T1", "x^3*dx+y^2*(c*x+y)*(x*dy-y*dx)");
  parametric("T2", "x^3*dx+y*(x+c*x*y+y^2)*(x*dy-y*dx)");
  parametric("T3", "x^3*dx+(x^2+c*x*y^2+y^3)*(x*dy-y*dx)");
  parametric("T4", "x^2*y*dx+(x^3+c*x*y^2+y^3)*(x*dy-y*dx)");
  parametric("T5", "x^2*y*dx+(x^3+delta*x*y+y^3)*(x*dy-y*dx)");
  parametric("T6", "x^2*y*dy+(x^3+c*x*y^2+y^3)*(x*dy-y*dx)");
  parametric("T7", "x*y*(x*dy-lambda*y*dx)+(x^3+y^3)*(x*dy-y*dx)");
  parametric("T8", "x*y*(y-x)*dx+(c0*x^3+c1*x^2*y+y^3)*(x*dy-y*dx)");
  parametric("G", "y*(a0*x^2+a1*x*y+y^2)*dx+x*y*(b0*x+b1*y)*dy+"
                  "x*(x^2+c1*x*y+c2*y^2)*(x*dy-y*dx)");

  {
    CatalogEntry e;
    e.name = "JOU";
    e.form_text = "(x^3*y-1)*dx+(y^3-x^4)*dy";
    e.expected.degree = 3;
    e.expected.flat = false;
    e.expected.double_inflection = true;
    e.expected.orbit_dim = 8;
    e.expected.homogeneous = false;
    add(e);
  }
  {
    CatalogEntry e;
    e.name = "EX_KAPPA2";
    e.form_text = "x*dy-y*dx+(y^2+y^3)*dy";
    e.expected.degree = 3;
    e.expected.n_sing = 2;
    add(e);
  }
  {
    CatalogEntry e;
    e.name = "EX_NO_DBL_INFL";
    e.form_text = "dx+(y^2+y^3)*dy";
    e.expected.degree = 3;
    e.expected.double_inflection = false;
    add(e);
  }
  {
    CatalogEntry e;
    e.name = "LIMIT_F1";
    e.form_text = "x*dy-y*dx+y^3*dy";
    e.expected.degree = 3;
    e.expected.flat = true;
    e.expected.convex = true;
    e.expected.n_sing = 2;
    e.expected.orbit_dim = 6;
    add(e);
  }
  {
    CatalogEntry e;
    e.name = "LIMIT_F2";
    e.form_text = "dx+y^3*dy";
    e.expected.degree = 3;
    e.expected.flat = true;
    e.expected.n_sing = 1;
    e.expected.orbit_dim = 6;
    add(e);
  }
  // F1^(d) / F2^(d), the minimal-orbit families
  for (int d = 2; d <= 5; ++d) {
    CatalogEntry e1;
    e1.name = "F1^(" + std::to_string(d) + ")";
    e1.form_text = "y^" + std::to_string(d) + "*dx+x^" + std::to_string(d) +
                   "*(x*dy-y*dx)";
    e1.expected.degree = d;
    e1.parametric = (d != 3);  // only the degree-3 member joins the sweep
    add(e1);
    CatalogEntry e2;
    e2.name = "F2^(" + std::to_string(d) + ")";
    e2.form_text = "x^" + std::to_string(d) + "*dx+y^" + std::to_string(d) +
                   "*(x*dy-y*dx)";
    e2.expected.degree = d;
    e2.parametric = (d != 3);
    add(e2);
  }
  return cat;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  }();
  return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  fail("UnknownEntry", "no catalog entry named '" + name + "'");
}

namespace {

bool is_homogeneous_foliation(const HomogForm& H) {
  Mat3F M = Mat3F::identity();
  M[0][0] = FieldElement(2);
  M[1][1] = FieldElement(2);
  return preserves(H, M);
}

EntryReport verify_entry(const CatalogEntry& e) {
  EntryReport r;
  r.name = e.name;
  auto expect = [&](bool cond, const std::string& what) {
    ++r.checks;
    if (!cond) r.mismatches.push_back(what);
  };
  PolyOneForm form = PolyOneForm::parse(e.form_text);
  HomogForm H = homogenize(form);
  r.degree = H.d;
  if (e.expected.degree) expect(H.d == *e.expected.degree, "degree");
  if (e.expected.flat) {
    r.flat = is_flat_homog(H);
    expect(r.flat == *e.expected.flat, "flat");
  }
  if (e.expected.convex) {
    r.convex = is_convex(H);
    expect(r.convex == *e.expected.convex, "convex");
  }
  SingularData sing;
  bool have_sing = true;
  try {
    sing = singular_points(H);
  } catch (const ComputationError&) {
    have_sing = false;
  }
  if (have_sing) {
    r.n_sing = sing.total_count();
    r.mu_sum = sing.mu_sum;
    if (e.name != "JOU") expect(sing.certificate, "milnor certificate");
    if (e.expected.n_sing) expect(r.n_sing == *e.expected.n_sing, "#Sing");
    for (const auto& ep : e.expected.points) {
      bool found = false;
      for (const auto& sp : sing.points) {
        if (!(sp.p == ep.p)) continue;
        found = true;
        if (ep.nu) expect(sp.nu == *ep.nu, "nu at " + ep.p.str());
        if (ep.mu) expect(sp.mu == *ep.mu, "mu at " + ep.p.str());
        if (ep.bb) {
          LocalInvariants li = local_invariants(H, sp.p);
          expect(li.bb && *li.bb == *ep.bb, "BB at " + ep.p.str());
        }
      }
      expect(found, "expected singular point " + ep.p.str());
    }
    if (e.expected.radial_order2) {
      bool has = false;
      for (const auto& sp : sing.points) {
        if (sp.nu != 1) continue;
        LocalInvariants li = local_invariants(H, sp.p);
        if (li.radial_order && *li.radial_order == 2) has = true;
      }
      expect(has == *e.expected.radial_order2, "radial order 2 flag");
    }
  }
  if (e.expected.double_inflection) {
    auto dbl = double_inflection_points(H);
    expect(!dbl.points.empty() == *e.expected.double_inflection,
           "double inflection flag");
  }
  if (e.expected.orbit_dim) {
    r.orbit_dim = orbit_dimension(H);
    expect(r.orbit_dim == *e.expected.orbit_dim, "orbit dimension");
  }
  if (e.expected.homogeneous)
    expect(is_homogeneous_foliation(H) == *e.expected.homogeneous, "homogeneity");
  for (const auto& g : e.generators) {
    ++r.checks;
    if (preserves(H, g))
      ++r.verified_generators;
    else
      r.mismatches.push_back("isotropy generator failed");
  }
  return r;
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& e : entries)
    if (!e.ok()) return false;
  return true;
}

VerifyReport verify_all(const std::optional<std::string>& only, int workers) {
  std::vector<const CatalogEntry*> todo;
  for (const auto& e : catalog()) {
    if (only && e.name != *only) continue;
    if (!only && e.parametric) continue;
    todo.push_back(&e);
  }
  if (only && todo.empty()) fail("UnknownEntry", "no catalog entry named '" + *only + "'");
  VerifyReport rep;
  if (workers <= 0) {
    const char* env = std::getenv("WEBFLAT_WORKERS");
    workers = env ? std::atoi(env) : static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  if (workers == 1 || todo.size() <= 1) {
    for (const auto* e : todo) rep.entries.push_back(verify_entry(*e));
  } else {
    std::vector<std::future<EntryReport>> futures;
    futures.reserve(todo.size());
    for (const auto* e : todo)
      futures.push_back(std::async(std::launch::async, [e] { return verify_entry(*e); }));
    for (auto& f : futures) rep.entries.push_back(f.get());
  }
  // Invariant-tuple separation across the sixteen classified forms.
  if (!only) {
    struct Tup {
      std::string name;
      bool homog, convex, radial2, dbl;
      int nsing, orbit;
    };
    std::vector<Tup> tups;
    for (const auto& e : catalog()) {
      if (e.parametric || !e.expected.flat || !*e.expected.flat) continue;
      HomogForm H = homogenize(PolyOneForm::parse(e.form_text));
      SingularData s = singular_points(H);
      bool radial2 = false;
      for (const auto& sp : s.points) {
        if (sp.nu != 1) continue;
        LocalInvariants li = local_invariants(H, sp.p);
        if (li.radial_order && *li.radial_order == 2) radial2 = true;
      }
      tups.push_back({e.name, is_homogeneous_foliation(H), is_convex(H), radial2,
                      !double_inflection_points(H).points.empty(), s.total_count(),
                      orbit_dimension(H)});
    }
    for (size_t i = 0; i < tups.size(); ++i)
      for (size_t j = i + 1; j < tups.size(); ++j) {
        const auto& a = tups[i];
        const auto& b = tups[j];
        if (a.homog == b.homog && a.convex == b.convex && a.radial2 == b.radial2 &&
            a.dbl == b.dbl && a.nsing == b.nsing && a.orbit == b.orbit)
          rep.unseparated_pairs.emplace_back(a.name, b.name);
      }
  }
  return rep;
}

}  // namespace webflat
