#include "webflat/roots.hpp"

#include <algorithm>
#include <cmath>

#include "webflat/errors.hpp"

namespace webflat {

std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> c) {
  using C = std::complex<double>;
  while (!c.empty() && std::abs(c.back()) < 1e-300) c.pop_back();
  if (c.size() <= 1) return {};
  // strip roots at zero
  std::vector<C> out;
  size_t shift = 0;
  while (shift < c.size() - 1 && std::abs(c[shift]) == 0.0) ++shift;
  for (size_t k = 0; k < shift; ++k) out.emplace_back(0.0, 0.0);
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  size_t n = c.size() - 1;
  if (n == 0) return out;
  for (auto& v : c) v /= c.back();
  // Cauchy-style radius bound.
  double r = 0.0;
  for (size_t k = 0; k < n; ++k) r = std::max(r, std::pow(std::abs(c[k]), 1.0 / double(n - k)));
  r = 2.0 * r + 1.0;
  std::vector<C> z(n);
  for (size_t k = 0; k < n; ++k)
    z[k] = std::polar(r * (0.3 + 0.7 * double(k + 1) / double(n)),
                      2.0 * M_PI * double(k) / double(n) + 0.41);
  auto eval = [&](C x, C& p, C& dp) {
    p = c[n];
    dp = C(0);
    for (size_t k = n; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[k];
    }
  };
  for (int it = 0; it < 400; ++it) {
    double moved = 0.0;
    for (size_t i = 0; i < n; ++i) {
      C p, dp;
      eval(z[i], p, dp);
      if (std::abs(p) < 1e-280) continue;
      C corr = dp / p;
      C sum(0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) sum += C(1) / (z[i] - z[j]);
      C delta = C(1) / (corr - sum);
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

FieldRoots field_roots(const MPoly& f, const std::string& var, long denom_bound) {
  FieldRoots res;
  if (f.is_zero()) fail("ZeroPolynomial", "field_roots of the zero polynomial");
  int d = f.degree_in(var);
  if (d == 0) return res;
  for (const auto& v : f.vars())
    if (v != var) fail("BadArgument", "field_roots: polynomial is not univariate");
  // Squarefree part keeps the root set and makes the numeric solve stable.
  MPoly g = MPoly::gcd(f, f.derivative(var));
  MPoly sf = g.is_constant() ? f : MPoly::exact_div(f, g);
  int sd = sf.degree_in(var);
  std::vector<std::complex<double>> coeffs(static_cast<size_t>(sd) + 1);
  auto cs = sf.coeffs_in(var);
  for (const auto& [k, c] : cs) coeffs[static_cast<size_t>(k)] = c.constant_value().embed();
  auto zs = complex_roots(coeffs);
  // Cluster numerically equal roots (paranoia; sf is squarefree).
  std::vector<std::complex<double>> uniq;
  for (auto z : zs) {
    bool dup = false;
    for (auto u : uniq)
      if (std::abs(u - z) < 1e-9) { dup = true; break; }
    if (!dup) uniq.push_back(z);
  }
  for (auto z : uniq) {
    auto cand = recognize(z, denom_bound);
    if (!cand) {
      ++res.unrecognized;
      continue;
    }
    FieldElement value = sf.eval({{var, *cand}});
    if (!value.is_zero()) {
      ++res.unrecognized;
      continue;
    }
    if (std::find(res.roots.begin(), res.roots.end(), *cand) == res.roots.end())
      res.roots.push_back(*cand);
  }
  return res;
}

}  // namespace webflat
