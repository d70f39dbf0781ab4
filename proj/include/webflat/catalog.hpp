#pragma once

#include <optional>
#include <string>
#include <vector>

#include "webflat/foliation.hpp"

namespace webflat {

struct ExpectedPoint {
  ProjPoint p;
  std::optional<int> nu, mu;
  std::optional<FieldElement> bb;
};

struct CatalogExpected {
  std::optional<int> degree, n_sing, orbit_dim;
  std::optional<bool> flat, convex, radial_order2, double_inflection, homogeneous;
  std::vector<ExpectedPoint> points;
};

struct CatalogEntry {
  std::string name;
  std::string form_text;         // parseable; may carry symbolic parameters
  bool parametric = false;       // excluded from the verification sweep
  CatalogExpected expected;
  std::vector<Mat3F> generators;  // isotropy elements to verify
};

const std::vector<std::string>& catalog_names();
const CatalogEntry& catalog_get(const std::string& name);  // UnknownEntry

// Per-entry verification outcome; `checks` counts individual comparisons.
struct EntryReport {
  std::string name;
  int checks = 0;
  std::vector<std::string> mismatches;
  // computed values for reporting
  int degree = 0;
  bool flat = false;
  bool convex = false;
  int n_sing = 0;
  int mu_sum = 0;
  int orbit_dim = 0;
  int verified_generators = 0;
  bool ok() const { return mismatches.empty(); }
};

struct VerifyReport {
  std::vector<EntryReport> entries;
  // pairs of catalog entries the computed invariant tuple does not separate
  std::vector<std::pair<std::string, std::string>> unseparated_pairs;
  bool ok() const;
};

// Run the full pipeline over the sweep entries (or a single one); workers > 1
// fans the independent entries out to a thread pool.
VerifyReport verify_all(const std::optional<std::string>& only = std::nullopt,
                        int workers = 0);

}  // namespace webflat
