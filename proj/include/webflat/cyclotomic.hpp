#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "webflat/rational.hpp"

namespace webflat {

// Element of the cyclotomic field Q(zeta_12) = Q[t]/(t^4 - t^2 + 1), stored as
// c0 + c1*t + c2*t^2 + c3*t^3 with zeta = e^{i pi/6}.  This field contains
// every constant of the catalog: i = zeta^3, sqrt(3) = 2*zeta - zeta^3,
// j = e^{2i pi/3} = zeta^4, xi = e^{i pi/6} = zeta.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long n) : c_{Rational(n), 0, 0, 0} {}  // NOLINT
  FieldElement(const Rational& r) : c_{r, 0, 0, 0} {}  // NOLINT
  explicit FieldElement(std::array<Rational, 4> c) : c_(std::move(c)) {}

  static FieldElement zero() { return FieldElement(); }
  static FieldElement one() { return FieldElement(1); }
  static FieldElement i() { return zeta_power(3); }
  static FieldElement sqrt3();
  static FieldElement zeta_power(long k);

  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const {
    return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  const Rational& rational_part() const { return c_[0]; }

  FieldElement operator-() const {
    return FieldElement({-c_[0], -c_[1], -c_[2], -c_[3]});
  }
  FieldElement operator+(const FieldElement& o) const {
    return FieldElement({c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
  }
  FieldElement operator-(const FieldElement& o) const {
    return FieldElement({c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]});
  }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement& operator+=(const FieldElement& o) { *this = *this + o; return *this; }
  FieldElement& operator-=(const FieldElement& o) { *this = *this - o; return *this; }
  FieldElement& operator*=(const FieldElement& o) { *this = *this * o; return *this; }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  bool operator==(const FieldElement& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Evaluation at zeta = e^{i pi/6}; display / numeric-oracle use only.
  std::complex<double> embed() const;

  // Coordinates in the display basis (1, r3, i, i*r3).
  std::array<Rational, 4> display_coords() const;

  // Canonical text in tokens 1, i, r3 (e.g. "-3+i*r3", "1/2").  This is the
  // same lexicon the expression parser accepts.
  std::string str() const;
  // True when str() is a single product token ("-2*i"), so it can prefix a
  // monomial without parentheses.
  bool is_single_term() const;

 private:
  std::array<Rational, 4> c_{};  // coefficients over 1, t, t^2, t^3
};

inline FieldElement operator*(const Rational& r, const FieldElement& x) {
  return FieldElement(r) * x;
}

// Denominator-bounded recognition of a complex double as a field element;
// returns candidates within 1e-8 of z under embed(), smallest denominators
// first.  Callers must verify exactly; this is a search helper, never a
// source of truth.
std::optional<FieldElement> recognize(std::complex<double> z, long denom_bound);

}  // namespace webflat
