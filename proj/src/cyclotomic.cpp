#include "webflat/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace webflat {

namespace {

// Multiplication table data: t^4 = t^2 - 1, t^5 = t^3 - t, t^6 = -1.
void reduce_deg6(std::array<Rational, 7>& d, std::array<Rational, 4>& out) {
  out[0] = d[0] - d[4] - d[6];
  out[1] = d[1] - d[5];
  out[2] = d[2] + d[4];
  out[3] = d[3] + d[5];
}

}  // namespace

FieldElement FieldElement::operator*(const FieldElement& o) const {
  std::array<Rational, 7> d{};
  for (int a = 0; a < 4; ++a) {
    if (c_[a].is_zero()) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c_[b].is_zero()) continue;
      d[a + b] += c_[a] * o.c_[b];
    }
  }
  std::array<Rational, 4> out;
  reduce_deg6(d, out);
  return FieldElement(out);
}

FieldElement FieldElement::zeta_power(long k) {
  k %= 12;
  if (k < 0) k += 12;
  // zeta^k reduced mod t^4 - t^2 + 1 for k = 0..11.
  static const int table[12][4] = {
      {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
      {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0},
      {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}};
  std::array<Rational, 4> c;
  for (int j = 0; j < 4; ++j) c[j] = Rational(table[k][j]);
  return FieldElement(c);
}

FieldElement FieldElement::sqrt3() {
  return FieldElement({Rational(0), Rational(2), Rational(0), Rational(-1)});
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero field element");
  // Solve M*y = e0 where M is the matrix of multiplication by *this in the
  // basis 1, t, t^2, t^3.  Column j of M holds *this * t^j.
  Rational m[4][5];
  FieldElement tj = FieldElement::one();
  for (int j = 0; j < 4; ++j) {
    FieldElement col = *this * tj;
    for (int i = 0; i < 4; ++i) m[i][j] = col.coeffs()[i];
    tj = tj * FieldElement::zeta_power(1);
  }
  for (int i = 0; i < 4; ++i) m[i][4] = Rational(i == 0 ? 1 : 0);
  // Gaussian elimination with exact pivots.
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) fail("DivisionByZero", "singular multiplication matrix");
    if (piv != col)
      for (int j = 0; j < 5; ++j) std::swap(m[piv][j], m[col][j]);
    Rational inv = m[col][col].inverse();
    for (int j = col; j < 5; ++j) m[col][j] = m[col][j] * inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int j = col; j < 5; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  return FieldElement({m[0][4], m[1][4], m[2][4], m[3][4]});
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = FieldElement::one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::complex<double> FieldElement::embed() const {
  static const std::complex<double> z = std::polar(1.0, M_PI / 6.0);
  std::complex<double> acc(0.0, 0.0);
  std::complex<double> zp(1.0, 0.0);
  for (int k = 0; k < 4; ++k) {
    acc += c_[k].to_double() * zp;
    zp *= z;
  }
  return acc;
}

std::array<Rational, 4> FieldElement::display_coords() const {
  // 1 = 1, t = (r3 + i)/2, t^2 = (1 + i*r3)/2, t^3 = i.
  Rational half(1, 2);
  std::array<Rational, 4> u;  // over (1, r3, i, i*r3)
  u[0] = c_[0] + half * c_[2];
  u[1] = half * c_[1];
  u[2] = c_[3] + half * c_[1];
  u[3] = half * c_[2];
  return u;
}

namespace {

void append_term(std::string& out, const Rational& coef, const std::string& sym) {
  if (coef.is_zero()) return;
  std::string body;
  Rational a = coef;
  bool neg = a.sign() < 0;
  if (neg) a = -a;
  if (sym.empty()) {
    body = a.str();
  } else if (a.is_one()) {
    body = sym;
  } else {
    body = a.str() + "*" + sym;
  }
  if (out.empty())
    out = (neg ? "-" : "") + body;
  else
    out += (neg ? "-" : "+") + body;
}

}  // namespace

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  auto u = display_coords();
  std::string out;
  append_term(out, u[0], "");
  append_term(out, u[1], "r3");
  append_term(out, u[2], "i");
  append_term(out, u[3], "i*r3");
  return out;
}

bool FieldElement::is_single_term() const {
  auto u = display_coords();
  int nz = 0;
  for (const auto& r : u)
    if (!r.is_zero()) ++nz;
  return nz <= 1;
}

namespace {

constexpr double kTol = 1e-8;
const double kSqrt3 = std::sqrt(3.0);

struct Decomp {
  Rational r, s;  // value ~ r + sqrt(3)*s
  long score;     // max denominator
};

// Best rational approximation with denominator <= bound (continued fractions).
Rational best_rational(double x, long bound) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 1e18 || fl < -1e18) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > bound) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = v - static_cast<double>(a);
    if (std::abs(rem) < 1e-15) break;
    v = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  return Rational(p1, q1);
}

// All decompositions x ~ r + sqrt(3)*s with denominators <= bound, ordered by
// max denominator then numerator size.
std::vector<Decomp> decompose(double x, long bound) {
  std::vector<Decomp> out;
  double amax = std::abs(x) / kSqrt3 + 1.5;
  for (long q2 = 1; q2 <= bound; ++q2) {
    long lim = static_cast<long>(amax * static_cast<double>(q2)) + 1;
    for (long a2 = -lim; a2 <= lim; ++a2) {
      Rational s(a2, q2);
      double rest = x - kSqrt3 * s.to_double();
      Rational r = best_rational(rest, bound);
      if (std::abs(r.to_double() - rest) > kTol) continue;
      long den_r = r.den().get_si();
      long den_s = s.den().get_si();
      out.push_back({r, s, std::max(den_r, den_s)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Decomp& a, const Decomp& b) {
    if (a.score != b.score) return a.score < b.score;
    return mpz_class(abs(a.r.num()) + abs(a.s.num())) <
           mpz_class(abs(b.r.num()) + abs(b.s.num()));
  });
  if (out.size() > 48) out.resize(48);
  return out;
}

}  // namespace

std::optional<FieldElement> recognize(std::complex<double> z, long denom_bound) {
  if (denom_bound < 1) fail("BadArgument", "recognize: denom_bound must be >= 1");
  // Re(z) = r1 + sqrt3*r2, Im(z) = s1 + sqrt3*s2 with the coefficient map
  // c = (r1 - s2, 2*r2, 2*s2, s1 - r2); internal denominators may double, so
  // search up to 2*bound and filter at the end.
  auto res = decompose(z.real(), 2 * denom_bound);
  auto ims = decompose(z.imag(), 2 * denom_bound);
  FieldElement best;
  long best_score = -1;
  for (const auto& re : res) {
    for (const auto& im : ims) {
      std::array<Rational, 4> c;
      c[0] = re.r - im.s;
      c[1] = Rational(2) * re.s;
      c[2] = Rational(2) * im.s;
      c[3] = im.r - re.s;
      FieldElement cand(c);
      bool ok = true;
      long score = 1;
      for (const auto& r : cand.coeffs()) {
        long d = r.den().get_si();
        if (d > denom_bound) { ok = false; break; }
        score = std::max(score, d);
      }
      if (!ok) continue;
      double err = std::abs(cand.embed() - z);
      if (err > kTol) continue;
      // Deep lattice points can land within 1e-8 of unrelated reals by
      // coincidence (e.g. 1/31+75/94*r3 is 4e-9 from sqrt(2)).  Candidates
      // beyond toy height must match to double-precision quality instead.
      if (score > 12 && err > 1e-10 * (1.0 + std::abs(z))) continue;
      if (best_score < 0 || score < best_score) {
        best = cand;
        best_score = score;
      }
    }
  }
  if (best_score < 0) return std::nullopt;
  return best;
}

}  // namespace webflat
