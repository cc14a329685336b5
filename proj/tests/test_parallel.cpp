#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydec/mindec.hpp"
#include "polydec/oracle.hpp"
#include "polydec/taxonomy.hpp"

using namespace polydec;

namespace {

Field gf(uint32_t p, uint32_t k = 1) { return FiniteField::get(p, k); }

}  // namespace

TEST_CASE("parallel oracle enumeration matches the serial reference") {
  Rng rng(109);
  for (uint32_t p : {2u, 3u, 5u}) {
    Field fd = gf(p);
    for (int i = 0; i < 8; ++i) {
      UniPoly g = random_normal(fd, 2 + static_cast<int>(rng.below(2)), rng);
      UniPoly h = random_normal(fd, 2 + static_cast<int>(rng.below(3)), rng);
      UniPoly f = compose(g, h);
      for (int d = 2; d < f.degree(); ++d) {
        if (f.degree() % d != 0) continue;
        OracleOptions par, ser;
        ser.parallel = false;
        CHECK(enumerate_right_components(f, d, par) ==
              enumerate_right_components(f, d, ser));
      }
    }
  }
}

TEST_CASE("census is schedule independent") {
  OracleOptions par, ser;
  ser.parallel = false;
  CensusResult a = census_p2(gf(3), CensusMode::Exhaustive, 0, 0, par);
  CensusResult b = census_p2(gf(3), CensusMode::Exhaustive, 0, 0, ser);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].f == b.rows[i].f);
    CHECK(a.rows[i].m == b.rows[i].m);
    CHECK(a.rows[i].n_decompositions == b.rows[i].n_decompositions);
  }
  CHECK(a.case1_count == b.case1_count);
}

TEST_CASE("repeated runs of min_decompositions are identical") {
  Field f3 = gf(3);
  UniPoly f = UniPoly::from_ints(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  auto cfg = CoprimeCheckConfig::for_input(f3, 9, 42, 3, CoprimeMode::Randomized);
  auto first = min_decompositions(f, cfg);
  for (int i = 0; i < 3; ++i) {
    auto again = min_decompositions(f, cfg);
    REQUIRE(again.size() == first.size());
    for (size_t j = 0; j < first.size(); ++j) {
      CHECK(again[j].g == first[j].g);
      CHECK(again[j].h == first[j].h);
    }
  }
}
