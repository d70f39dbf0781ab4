#include <fstream>
#include <sstream>

#include "doctest.h"
#include "webflat/catalog.hpp"
#include "webflat/errors.hpp"
#include "webflat/parser.hpp"

using namespace webflat;

TEST_CASE("catalog lookup") {
  CHECK(catalog_names().size() >= 30);
  const auto& h10 = catalog_get("H10");
  CHECK(PolyOneForm::parse(h10.form_text) ==
        PolyOneForm::parse("(3*x+r3*y)*y^2*dx+(3*y-r3*x)*x^2*dy"));
  const auto& f5 = catalog_get("F5");
  CHECK(PolyOneForm::parse(f5.form_text) ==
        PolyOneForm::parse("y^2*(y*dx+2*x*dy)+x^3*(x*dy-y*dx)"));
  const auto& f12 = catalog_get("F1^(2)");
  CHECK(PolyOneForm::parse(f12.form_text) ==
        PolyOneForm::parse("y^2*dx+x^2*(x*dy-y*dx)"));
  CHECK_THROWS_AS(catalog_get("nonsense"), ComputationError);
}

TEST_CASE("catalog renders match the golden transcription") {
  std::ifstream in(std::string(WEBFLAT_TEST_DATA_DIR) + "/catalog_forms.txt");
  REQUIRE(in.good());
  std::map<std::string, std::string> golden;
  std::string line;
  while (std::getline(in, line)) {
    auto sp = line.find(' ');
    REQUIRE(sp != std::string::npos);
    golden[line.substr(0, sp)] = line.substr(sp + 1);
  }
  CHECK(golden.size() == catalog_names().size());
  for (const auto& n : catalog_names()) {
    const auto& e = catalog_get(n);
    REQUIRE(golden.count(n) == 1);
    CHECK(PolyOneForm::parse(e.form_text).str() == golden[n]);
  }
}

TEST_CASE("round trip parse(render()) on every catalog entry") {
  for (const auto& n : catalog_names()) {
    const auto& e = catalog_get(n);
    PolyOneForm f = PolyOneForm::parse(e.form_text);
    CHECK(PolyOneForm::parse(f.str()) == f);
  }
}

TEST_CASE("verify a single entry") {
  auto rep = verify_all(std::string("F2"), 1);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].ok());
  CHECK(rep.entries[0].n_sing == 1);
  CHECK(rep.entries[0].mu_sum == 13);
  CHECK(rep.entries[0].flat);
  CHECK(rep.entries[0].orbit_dim == 6);
}
