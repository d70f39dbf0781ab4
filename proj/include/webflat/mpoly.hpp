#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "webflat/cyclotomic.hpp"

namespace webflat {

// Global variable order x < y < z < p < q < w < eps < parameters; parameters
// sort alphabetically among themselves.  All canonical forms (term order,
// monic normalization, text rendering) refer to this order.
int var_rank(const std::string& name);
bool var_less(const std::string& a, const std::string& b);

// Sparse multivariate polynomial over Q(zeta_12).  The variable list is kept
// sorted by the global order and pruned to the variables actually present, so
// equal polynomials compare equal structurally.  Terms are kept in graded-lex
// order; the leading term is the map's last entry.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, FieldElement, GrlexLess>;

  MPoly() = default;
  explicit MPoly(const FieldElement& c);
  explicit MPoly(long n) : MPoly(FieldElement(n)) {}
  static MPoly variable(const std::string& name);
  static MPoly constant(const FieldElement& c) { return MPoly(c); }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_value() const;  // requires is_constant
  size_t term_count() const { return terms_.size(); }

  int total_degree() const;            // -1 for zero
  int degree_in(const std::string& v) const;
  int degree_in_vars(const std::vector<std::string>& vs) const;  // -1 for zero
  bool has_var(const std::string& v) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
  MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
  MPoly pow(long e) const;
  MPoly scaled(const FieldElement& c) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  FieldElement leading_coeff() const;  // zero poly -> 0
  MPoly normalized_monic() const;      // leading coefficient 1

  MPoly derivative(const std::string& v) const;

  // View as polynomial in v: v-degree -> coefficient (v stripped).
  std::map<int, MPoly> coeffs_in(const std::string& v) const;
  MPoly coeff_of(const std::string& v, int k) const;
  static MPoly from_coeffs_in(const std::string& v, const std::map<int, MPoly>& cs);
  // Coefficient of v1^e1 * v2^e2 with both variables stripped.
  MPoly coeff_of2(const std::string& v1, int e1, const std::string& v2, int e2) const;

  int valuation(const std::vector<std::string>& vs) const;  // ZeroPolynomial on 0
  MPoly jet(const std::vector<std::string>& vs, int k) const;
  MPoly homogeneous_part(const std::vector<std::string>& vs, int k) const;
  bool is_homogeneous_in(const std::vector<std::string>& vs) const;

  MPoly substitute(const std::map<std::string, MPoly>& sub) const;
  MPoly eval_partial(const std::map<std::string, FieldElement>& sub) const;
  FieldElement eval(const std::map<std::string, FieldElement>& point) const;
  std::complex<double> eval_complex(
      const std::map<std::string, std::complex<double>>& point) const;
  MPoly rename_var(const std::string& from, const std::string& to) const;

  static std::optional<MPoly> try_exact_div(const MPoly& f, const MPoly& g);
  static MPoly exact_div(const MPoly& f, const MPoly& g);  // NotDivisible
  static bool divides(const MPoly& g, const MPoly& f);
  static MPoly gcd(const MPoly& f, const MPoly& g);  // monic normalized

  // Content (gcd of v-coefficients) and primitive part with respect to v.
  static std::pair<MPoly, MPoly> content_primitive(const MPoly& f, const std::string& v);

  std::string str() const;

 private:
  void insert_term(const Exponents& e, const FieldElement& c);
  void prune();
  static void align(const MPoly& a, const MPoly& b, std::vector<std::string>& vars,
                    TermMap& ta, TermMap& tb);
  MPoly with_vars(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MPoly operator*(const FieldElement& c, const MPoly& f);

// Determinant of a square polynomial matrix: cofactor expansion for n <= 3,
// Bareiss fraction-free elimination (row swaps with sign tracking) above.
MPoly det(std::vector<std::vector<MPoly>> m);

// Sylvester resultant in v, rows ordered f-then-g.  BothConstant if neither
// argument has positive degree in v.
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& v);

// Reduced rational function: gcd(num, den) a unit, den monic in graded-lex.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MPoly(1)) {}
  RatFunc(MPoly num, MPoly den);
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  std::string str() const;

 private:
  MPoly num_, den_;
};

}  // namespace webflat
