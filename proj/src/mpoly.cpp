#include "webflat/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "webflat/errors.hpp"

namespace webflat {

int var_rank(const std::string& name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  if (name == "p") return 3;
  if (name == "q") return 4;
  if (name == "w") return 5;
  if (name == "eps") return 6;
  return 7;
}

bool var_less(const std::string& a, const std::string& b) {
  int ra = var_rank(a), rb = var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool MPoly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  // Tie-break from the highest-ranked variable (last index) down.
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MPoly::MPoly(const FieldElement& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(const std::string& name) {
  MPoly f;
  f.vars_ = {name};
  f.terms_.emplace(Exponents{1}, FieldElement::one());
  return f;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0) == 0;
}

FieldElement MPoly::constant_value() const {
  if (terms_.empty()) return FieldElement::zero();
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::degree_in(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

int MPoly::degree_in_vars(const std::vector<std::string>& vs) const {
  if (is_zero()) return -1;
  std::vector<size_t> idx;
  for (const auto& v : vs) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it != vars_.end()) idx.push_back(static_cast<size_t>(it - vars_.begin()));
  }
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (size_t i : idx) s += e[i];
    best = std::max(best, s);
  }
  return best;
}

bool MPoly::has_var(const std::string& v) const { return degree_in(v) > 0; }

void MPoly::insert_term(const Exponents& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::prune() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(nv.size());
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
  MPoly out;
  out.vars_ = vars;
  std::vector<int> pos(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    assert(it != vars.end());
    pos[i] = static_cast<int>(it - vars.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[static_cast<size_t>(pos[i])] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

void MPoly::align(const MPoly& a, const MPoly& b, std::vector<std::string>& vars,
                  TermMap& ta, TermMap& tb) {
  vars.clear();
  std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
             std::back_inserter(vars), var_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  ta = a.with_vars(vars).terms_;
  tb = b.with_vars(vars).terms_;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out;
  TermMap ta, tb;
  align(*this, o, out.vars_, ta, tb);
  out.terms_ = std::move(ta);
  for (const auto& [e, c] : tb) out.insert_term(e, c);
  out.prune();
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  MPoly out;
  TermMap ta, tb;
  align(*this, o, out.vars_, ta, tb);
  size_t n = out.vars_.size();
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      Exponents e(n);
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  out.prune();
  return out;
}

MPoly MPoly::pow(long e) const {
  if (e < 0) fail("BadArgument", "negative polynomial power");
  MPoly r(FieldElement::one());
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MPoly MPoly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return MPoly();
  MPoly out = *this;
  for (auto& [e, v] : out.terms_) v = v * c;
  return out;
}

MPoly operator*(const FieldElement& c, const MPoly& f) { return f.scaled(c); }

bool MPoly::operator==(const MPoly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

FieldElement MPoly::leading_coeff() const {
  if (terms_.empty()) return FieldElement::zero();
  return terms_.rbegin()->second;
}

MPoly MPoly::normalized_monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

MPoly MPoly::derivative(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return MPoly();
  size_t idx = static_cast<size_t>(it - vars_.begin());
  MPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    ne[idx] -= 1;
    out.insert_term(ne, FieldElement(Rational(e[idx])) * c);
  }
  out.prune();
  return out;
}

std::map<int, MPoly> MPoly::coeffs_in(const std::string& v) const {
  std::map<int, MPoly> out;
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) {
    if (!is_zero()) out.emplace(0, *this);
    return out;
  }
  size_t idx = static_cast<size_t>(it - vars_.begin());
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<long>(idx));
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne.erase(ne.begin() + static_cast<long>(idx));
    MPoly& target = out[e[idx]];
    if (target.vars_.empty() && target.terms_.empty()) target.vars_ = rest;
    target.insert_term(ne, c);
  }
  for (auto& [k, f] : out) f.prune();
  return out;
}

MPoly MPoly::coeff_of(const std::string& v, int k) const {
  auto cs = coeffs_in(v);
  auto it = cs.find(k);
  return it == cs.end() ? MPoly() : it->second;
}

MPoly MPoly::from_coeffs_in(const std::string& v, const std::map<int, MPoly>& cs) {
  MPoly out;
  MPoly vp = MPoly::variable(v);
  for (const auto& [k, f] : cs) out += f * vp.pow(k);
  return out;
}

MPoly MPoly::coeff_of2(const std::string& v1, int e1, const std::string& v2,
                       int e2) const {
  return coeff_of(v1, e1).coeff_of(v2, e2);
}

int MPoly::valuation(const std::vector<std::string>& vs) const {
  if (is_zero()) fail("ZeroPolynomial", "valuation of the zero polynomial");
  std::vector<size_t> idx;
  for (const auto& v : vs) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it != vars_.end()) idx.push_back(static_cast<size_t>(it - vars_.begin()));
  }
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (size_t i : idx) s += e[i];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

MPoly MPoly::jet(const std::vector<std::string>& vs, int k) const {
  std::vector<size_t> idx;
  for (const auto& v : vs) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it != vars_.end()) idx.push_back(static_cast<size_t>(it - vars_.begin()));
  }
  MPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (size_t i : idx) s += e[i];
    if (s <= k) out.insert_term(e, c);
  }
  out.prune();
  return out;
}

MPoly MPoly::homogeneous_part(const std::vector<std::string>& vs, int k) const {
  std::vector<size_t> idx;
  for (const auto& v : vs) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it != vars_.end()) idx.push_back(static_cast<size_t>(it - vars_.begin()));
  }
  MPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (size_t i : idx) s += e[i];
    if (s == k) out.insert_term(e, c);
  }
  out.prune();
  return out;
}

bool MPoly::is_homogeneous_in(const std::vector<std::string>& vs) const {
  if (is_zero()) return true;
  return homogeneous_part(vs, valuation(vs)) == *this;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& sub) const {
  // Power cache per substituted variable.
  std::map<std::string, std::vector<MPoly>> powers;
  for (const auto& [v, val] : sub) powers[v] = {MPoly(FieldElement::one()), val};
  auto power = [&](const std::string& v, int e) -> const MPoly& {
    auto& cache = powers[v];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<size_t>(e)];
  };
  MPoly out;
  for (const auto& [e, c] : terms_) {
    MPoly term(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = sub.find(vars_[i]);
      if (it != sub.end()) {
        term = term * power(vars_[i], e[i]);
      } else {
        term = term * MPoly::variable(vars_[i]).pow(e[i]);
      }
    }
    out += term;
  }
  return out;
}

MPoly MPoly::eval_partial(const std::map<std::string, FieldElement>& sub) const {
  MPoly out;
  std::vector<const FieldElement*> vals(vars_.size(), nullptr);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = sub.find(vars_[i]);
    if (it != sub.end()) vals[i] = &it->second;
  }
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    FieldElement coef = c;
    Exponents ne = e;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (vals[i] && e[i] > 0) {
        coef = coef * vals[i]->pow(e[i]);
        ne[i] = 0;
      }
    }
    out.insert_term(ne, coef);
  }
  out.prune();
  return out;
}

FieldElement MPoly::eval(const std::map<std::string, FieldElement>& point) const {
  MPoly r = eval_partial(point);
  if (!r.is_constant()) fail("BadArgument", "eval: unbound variables remain");
  return r.constant_value();
}

std::complex<double> MPoly::eval_complex(
    const std::map<std::string, std::complex<double>>& point) const {
  std::vector<std::complex<double>> vals(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) fail("BadArgument", "eval_complex: missing " + vars_[i]);
    vals[i] = it->second;
  }
  std::complex<double> acc(0, 0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.embed();
    for (size_t i = 0; i < vars_.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= vals[i];
    acc += t;
  }
  return acc;
}

MPoly MPoly::rename_var(const std::string& from, const std::string& to) const {
  if (!has_var(from)) return *this;
  return substitute({{from, MPoly::variable(to)}});
}

std::optional<MPoly> MPoly::try_exact_div(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) fail("DivisionByZero", "division by zero polynomial");
  if (f.is_zero()) return MPoly();
  MPoly q;
  TermMap tf, tg;
  std::vector<std::string> vars;
  align(f, g, vars, tf, tg);
  q.vars_ = vars;
  const auto& ltg = *std::prev(tg.end());
  FieldElement lcg_inv = ltg.second.inverse();
  MPoly r;
  r.vars_ = vars;
  r.terms_ = std::move(tf);
  size_t n = vars.size();
  while (!r.terms_.empty()) {
    const auto& ltr = *std::prev(r.terms_.end());
    Exponents qe(n);
    for (size_t i = 0; i < n; ++i) {
      qe[i] = ltr.first[i] - ltg.first[i];
      if (qe[i] < 0) return std::nullopt;
    }
    FieldElement qc = ltr.second * lcg_inv;
    q.insert_term(qe, qc);
    // r -= qc * x^qe * g
    for (const auto& [e, c] : tg) {
      Exponents ne(n);
      for (size_t i = 0; i < n; ++i) ne[i] = e[i] + qe[i];
      r.insert_term(ne, -(qc * c));
    }
  }
  q.prune();
  return q;
}

MPoly MPoly::exact_div(const MPoly& f, const MPoly& g) {
  auto q = try_exact_div(f, g);
  if (!q) fail("NotDivisible", "exact division with nonzero remainder");
  return *q;
}

bool MPoly::divides(const MPoly& g, const MPoly& f) {
  return try_exact_div(f, g).has_value();
}

namespace {

// Pseudo-remainder of a by b in v: lc(b)^(da-db+1) * a  mod  b.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, const std::string& v) {
  int da = a.degree_in(v), db = b.degree_in(v);
  MPoly lb = b.coeff_of(v, db);
  MPoly r = a;
  int e = da - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    MPoly lr = r.coeff_of(v, dr);
    MPoly shift = MPoly::variable(v).pow(dr - db);
    r = lb * r - lr * shift * b;
    --e;
  }
  if (e > 0) r = r * lb.pow(e);
  return r;
}

// Subresultant PRS gcd of two v-primitive polynomials; returns a primitive gcd.
MPoly prs_gcd(MPoly a, MPoly b, const std::string& v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  if (b.is_zero()) return a;
  MPoly g(1), h(1);
  for (int guard = 0; guard < 10000; ++guard) {
    int d = a.degree_in(v) - b.degree_in(v);
    MPoly rem = pseudo_rem(a, b, v);
    if (rem.is_zero()) break;
    if (b.degree_in(v) == 0) return MPoly(1);
    MPoly divisor = g * h.pow(d);
    a = b;
    b = MPoly::exact_div(rem, divisor);
    g = a.coeff_of(v, a.degree_in(v));
    if (d > 0) h = MPoly::exact_div(g.pow(d), h.pow(d - 1));
  }
  if (b.degree_in(v) == 0) return MPoly(1);
  return MPoly::content_primitive(b, v).second;
}

}  // namespace

std::pair<MPoly, MPoly> MPoly::content_primitive(const MPoly& f, const std::string& v) {
  if (f.is_zero()) return {MPoly(), MPoly()};
  if (f.degree_in(v) == 0) return {f, MPoly(1)};
  auto cs = f.coeffs_in(v);
  MPoly cont;
  for (const auto& [k, c] : cs) {
    cont = gcd(cont, c);
    if (cont.is_constant()) break;
  }
  if (cont.is_constant()) return {MPoly(1), f};
  return {cont, exact_div(f, cont)};
}

MPoly MPoly::gcd(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) return g.normalized_monic();
  if (g.is_zero()) return f.normalized_monic();
  if (f.is_constant() || g.is_constant()) return MPoly(1);
  // Recurse on the lowest-ranked variable present in either argument.
  std::string v = f.vars_.empty() ? g.vars_.front() : f.vars_.front();
  if (!g.vars_.empty() && var_less(g.vars_.front(), v)) v = g.vars_.front();
  auto [cf, pf] = content_primitive(f, v);
  auto [cg, pg] = content_primitive(g, v);
  MPoly c = gcd(cf, cg);
  MPoly h = prs_gcd(pf, pg, v);
  return (c * h).normalized_monic();
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  // Display order inside a monomial: parameters first (alphabetically), then
  // the geometric variables by rank, matching how the formulas are written.
  std::vector<size_t> order;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (var_rank(vars_[i]) >= 7) order.push_back(i);
  for (size_t i = 0; i < vars_.size(); ++i)
    if (var_rank(vars_[i]) < 7) order.push_back(i);
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t i : order) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else if (c.is_single_term()) {
      term = c.str() + "*" + mono;
    } else {
      term = "(" + c.str() + ")*" + mono;
    }
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out;
}

namespace {

MPoly det_cofactor(const std::vector<std::vector<MPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MPoly acc;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> sub;
    sub.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    MPoly term = m[0][j] * det_cofactor(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

MPoly det(std::vector<std::vector<MPoly>> m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail("BadArgument", "det: matrix not square");
  if (n == 0) return MPoly(1);
  if (n <= 3) return det_cofactor(m);
  // Bareiss fraction-free elimination.
  int sign = 1;
  MPoly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k;
      for (size_t r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) { piv = r; break; }
      if (piv == k) return MPoly();  // whole column zero
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = MPoly::exact_div(num, prev);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& v) {
  int m = f.degree_in(v), n = g.degree_in(v);
  if (m == 0 && n == 0)
    fail("BothConstant", "resultant: neither argument depends on " + v);
  if (f.is_zero() || g.is_zero()) return MPoly();
  auto fc = f.coeffs_in(v);
  auto gc = g.coeffs_in(v);
  auto coef = [](const std::map<int, MPoly>& cs, int k) -> MPoly {
    auto it = cs.find(k);
    return it == cs.end() ? MPoly() : it->second;
  };
  size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = coef(fc, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = coef(gc, n - k);
  return det(std::move(s));
}

RatFunc::RatFunc(MPoly num, MPoly den) {
  if (den.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = MPoly();
    den_ = MPoly(1);
    return;
  }
  MPoly g = MPoly::gcd(num, den);
  if (!g.is_constant()) {
    num = MPoly::exact_div(num, g);
    den = MPoly::exact_div(den, g);
  }
  FieldElement lc = den.leading_coeff().inverse();
  num_ = num.scaled(lc);
  den_ = den.scaled(lc);
}

std::string RatFunc::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace webflat
