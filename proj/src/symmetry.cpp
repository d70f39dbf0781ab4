#include "webflat/symmetry.hpp"

#include <vector>

#include "webflat/errors.hpp"

namespace webflat {

bool preserves(const HomogForm& H, const Mat3F& M) {
  return pullback(H, M).proportional_to(H);
}

namespace {

// Incremental exact rank of a system of rows over the field (9 columns).
class RankAccumulator {
 public:
  void add(std::array<FieldElement, 9> row) {
    for (auto& piv : rows_) {
      size_t lead = piv.second;
      if (row[lead].is_zero()) continue;
      FieldElement f = row[lead];
      for (size_t k = 0; k < 9; ++k) row[k] = row[k] - f * piv.first[k];
    }
    for (size_t k = 0; k < 9; ++k) {
      if (row[k].is_zero()) continue;
      FieldElement inv = row[k].inverse();
      for (size_t j = 0; j < 9; ++j) row[j] = row[j] * inv;
      rows_.emplace_back(row, k);
      return;
    }
  }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::pair<std::array<FieldElement, 9>, size_t>> rows_;
};

}  // namespace

int isotropy_solution_dimension(const HomogForm& H) {
  const char* names[3] = {"x", "y", "z"};
  const MPoly* comps[3] = {&H.a, &H.b, &H.c};
  // eta(a,b) for the basis matrix E_ab: eta_j = x_b d(Omega_j)/d(x_a) + [j==b] Omega_a
  std::array<std::array<MPoly, 3>, 9> eta;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      size_t idx = static_cast<size_t>(3 * a + b);
      for (int j = 0; j < 3; ++j) {
        MPoly v = MPoly::variable(names[b]) * comps[j]->derivative(names[a]);
        if (j == b) v += *comps[a];
        eta[idx][static_cast<size_t>(j)] = v;
      }
    }
  }
  // Cross coefficients of eta ^ Omega, one polynomial per unknown; each
  // monomial of each cross component contributes a linear equation.
  RankAccumulator rank;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    int u = pr[0], v = pr[1];
    std::array<MPoly, 9> cross;
    std::vector<std::string> vars;
    for (size_t k = 0; k < 9; ++k) {
      cross[k] = eta[k][static_cast<size_t>(u)] * (*comps[v]) -
                 eta[k][static_cast<size_t>(v)] * (*comps[u]);
      for (const auto& name : cross[k].vars())
        if (std::find(vars.begin(), vars.end(), name) == vars.end())
          vars.push_back(name);
    }
    std::sort(vars.begin(), vars.end(), var_less);
    // collect every monomial appearing in any of the nine polynomials
    std::map<std::vector<int>, std::array<FieldElement, 9>> eqs;
    for (size_t k = 0; k < 9; ++k) {
      MPoly aligned = cross[k];
      for (const auto& [e, c] : aligned.terms()) {
        // re-express exponents over the shared variable list
        std::vector<int> key(vars.size(), 0);
        const auto& pv = aligned.vars();
        for (size_t i = 0; i < pv.size(); ++i) {
          auto it = std::find(vars.begin(), vars.end(), pv[i]);
          key[static_cast<size_t>(it - vars.begin())] = e[i];
        }
        eqs[key][k] = c;
      }
    }
    for (auto& [mono, row] : eqs) rank.add(row);
  }
  return 9 - rank.rank();
}

int isotropy_lie_dimension(const HomogForm& H) {
  int dim = isotropy_solution_dimension(H) - 1;
  if (dim < 0) fail("BadArgument", "radial solution missing: form not saturated?");
  return dim;
}

int orbit_dimension(const HomogForm& H) { return 8 - isotropy_lie_dimension(H); }

bool conjugacy_witness_check(const HomogForm& F, const HomogForm& G, const Mat3F& M) {
  return pullback(G, M).proportional_to(F);
}

}  // namespace webflat
