#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydec/poly.hpp"
#include "polydec/rng.hpp"

using namespace polydec;

namespace {

Field gf(uint32_t p, uint32_t k = 1) { return FiniteField::get(p, k); }

UniPoly P(Field f, std::vector<int64_t> c) { return UniPoly::from_ints(f, std::move(c)); }

}  // namespace

TEST_CASE("divrem") {
  Field f3 = gf(3);
  auto [q1, r1] = divrem(P(f3, {0, -1, 0, 1}), UniPoly::x(f3));
  CHECK(q1 == P(f3, {-1, 0, 1}));
  CHECK(r1.is_zero());

  auto [q2, r2] = divrem(UniPoly::x(f3), P(f3, {0, 0, 1}));
  CHECK(q2.is_zero());
  CHECK(r2 == UniPoly::x(f3));

  // x^9 - x by x^3 - x; the oracle is re-multiplication
  UniPoly f = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  UniPoly d = P(f3, {0, -1, 0, 1});
  auto [q3, r3] = divrem(f, d);
  CHECK(q3 * d + r3 == f);
  CHECK(r3.deg_or(-1) < d.degree());
  CHECK(q3 == P(f3, {1, 0, 1, 0, 1, 0, 1}));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(divrem(f, UniPoly::zero(f3)), Error);
}

TEST_CASE("gcd") {
  Field f5 = gf(5);
  CHECK(gcd(P(f5, {-1, 0, 1}), P(f5, {-1, 1})) == P(f5, {-1, 1}));
  // gcd with zero normalizes
  CHECK(gcd(P(f5, {2, 4}), UniPoly::zero(f5)) == P(f5, {3, 1}));
  Field f2 = gf(2);
  CHECK(gcd(P(f2, {1, 1, 1}), P(f2, {1, 0, 1})) == P(f2, {1}));
}

TEST_CASE("resultant") {
  Field f7 = gf(7);
  // res(x - u, x - v) = v - u
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v)
      CHECK(resultant(P(f7, {-u, 1}), P(f7, {-v, 1})) == f7->from_int(v - u));

  UniPoly f = P(f7, {1, 2, 1, 3});
  CHECK(resultant(f, f).is_zero());

  // cross-check against the product of evaluations in GF(9)
  Field f3 = gf(3);
  UniPoly a = P(f3, {1, 0, 1});  // x^2 + 1
  UniPoly b = P(f3, {1, 1, 1});  // x^2 + x + 1
  FieldElement r = resultant(a, b);
  CHECK(!r.is_zero());
  Field f9 = gf(3, 2);
  FieldElement prod = f9->one();
  int roots = 0;
  for (uint64_t i = 0; i < 9; ++i) {
    FieldElement x = f9->element_at(i);
    if (a.map_into(f9)(x).is_zero()) {
      prod = prod * b.map_into(f9)(x);
      ++roots;
    }
  }
  CHECK(roots == 2);
  // even-degree monic pair: both conventions coincide with the product
  CHECK(embed(r, f9) == prod);
}

TEST_CASE("resultant vanishes iff gcd is nontrivial") {
  Rng rng(11);
  for (uint32_t p : {2u, 3u, 5u}) {
    Field f = gf(p);
    for (int i = 0; i < 200; ++i) {
      UniPoly a = random_monic(f, 1 + static_cast<int>(rng.below(5)), rng);
      UniPoly b = random_poly(f, 1 + static_cast<int>(rng.below(5)), rng);
      CHECK(resultant(a, b).is_zero() == !gcd(a, b).is_constant());
    }
  }
}

TEST_CASE("compose") {
  Field f3 = gf(3);
  CHECK(compose(P(f3, {0, 0, 1}), P(f3, {0, 0, 0, 1})) ==
        UniPoly::monomial(f3, 6, f3->one()));
  CHECK(compose(P(f3, {0, 1, 0, 1}), P(f3, {0, -1, 0, 1})) ==
        P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(compose(UniPoly::x(f3), P(f3, {0, -1, 0, 1})) == P(f3, {0, -1, 0, 1}));
}

TEST_CASE("compose is associative") {
  Rng rng(5);
  for (uint32_t p : {2u, 3u, 5u}) {
    Field fd = gf(p);
    for (int i = 0; i < 25; ++i) {
      UniPoly f = random_poly(fd, 1 + static_cast<int>(rng.below(3)), rng);
      UniPoly g = random_poly(fd, 1 + static_cast<int>(rng.below(3)), rng);
      UniPoly h = random_poly(fd, 1 + static_cast<int>(rng.below(3)), rng);
      CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
    }
  }
}

TEST_CASE("normalize") {
  Field f7 = gf(7);
  UniPoly already = P(f7, {0, 2, 1});
  auto [l1, n1] = normalize(already);
  CHECK(n1 == already);
  CHECK(l1 == LinearPoly::identity(f7));

  auto [l2, n2] = normalize(P(f7, {6, 4, 2}));
  CHECK(l2.a() == f7->from_int(4));
  CHECK(l2.b() == f7->from_int(4));
  CHECK(n2 == P(f7, {0, 2, 1}));
  CHECK(compose(l2.to_poly(), P(f7, {6, 4, 2})) == n2);

  CHECK_THROWS_AS(normalize(P(f7, {3})), Error);
}

TEST_CASE("normalize is invariant under left linear composition") {
  Rng rng(17);
  for (uint32_t p : {3u, 5u}) {
    Field fd = gf(p);
    for (int i = 0; i < 50; ++i) {
      UniPoly f = random_poly(fd, 2 + static_cast<int>(rng.below(4)), rng);
      FieldElement a = fd->random_element(rng);
      while (a.is_zero()) a = fd->random_element(rng);
      LinearPoly ell(a, fd->random_element(rng));
      CHECK(normalize(compose(ell.to_poly(), f)).second == normalize(f).second);
    }
  }
}

TEST_CASE("conjugate") {
  Field f5 = gf(5);
  UniPoly f = P(f5, {0, 3, 0, 1});
  CHECK(conjugate(f, f5->zero()) == f);
  CHECK(conjugate(P(f5, {0, 0, 1}), f5->one()) == P(f5, {0, 2, 1}));
  CHECK_THROWS_AS(conjugate(P(f5, {1, 1}), f5->one()), Error);

  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    UniPoly g = random_normal(f5, 2 + static_cast<int>(rng.below(5)), rng);
    FieldElement w = f5->random_element(rng);
    UniPoly c = conjugate(g, w);
    CHECK(c.is_normal());
    CHECK(conjugate(c, -w) == g);
  }
}

TEST_CASE("taylor_left_component") {
  Field f3 = gf(3);
  UniPoly f = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  auto g = taylor_left_component(f, P(f3, {0, -1, 0, 1}));
  REQUIRE(g.has_value());
  CHECK(*g == P(f3, {0, 1, 0, 1}));

  auto g2 = taylor_left_component(UniPoly::monomial(f3, 6, f3->one()),
                                  UniPoly::monomial(f3, 2, f3->one()));
  REQUIRE(g2.has_value());
  CHECK(*g2 == UniPoly::monomial(f3, 3, f3->one()));

  Field f2 = gf(2);
  CHECK(!taylor_left_component(P(f2, {0, 1, 0, 0, 1}), P(f2, {0, 0, 1})).has_value());
}

TEST_CASE("taylor recovers the left component of random compositions") {
  Rng rng(29);
  for (uint32_t q : {2u, 3u, 5u, 7u}) {
    Field fd = gf(q);
    for (int i = 0; i < 30; ++i) {
      UniPoly g = random_normal(fd, 2 + static_cast<int>(rng.below(5)), rng);
      UniPoly h = random_normal(fd, 2 + static_cast<int>(rng.below(5)), rng);
      auto back = taylor_left_component(compose(g, h), h);
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
  }
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    Field fd = gf(p, k);
    for (int i = 0; i < 20; ++i) {
      UniPoly g = random_normal(fd, 2 + static_cast<int>(rng.below(4)), rng);
      UniPoly h = random_normal(fd, 2 + static_cast<int>(rng.below(4)), rng);
      auto back = taylor_left_component(compose(g, h), h);
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
  }
}

TEST_CASE("rational functions") {
  Field f5 = gf(5);
  RatFun a(P(f5, {1, 1}), P(f5, {0, 2}));  // (x+1)/(2x) normalized to monic den
  CHECK(a.den() == UniPoly::x(f5));
  CHECK(a.num() == P(f5, {3, 3}));
  RatFun b = RatFun::of(UniPoly::x(f5));
  CHECK((a * a.inv()).num() == P(f5, {1}));
  CHECK((a - a).is_zero());
  CHECK((a + b).den() == UniPoly::x(f5));
  CHECK_THROWS_AS(RatFun(P(f5, {1}), UniPoly::zero(f5)), Error);

  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    RatFun x(random_poly(f5, static_cast<int>(rng.below(4)), rng),
             random_monic(f5, 1 + static_cast<int>(rng.below(3)), rng));
    RatFun y(random_poly(f5, static_cast<int>(rng.below(4)), rng),
             random_monic(f5, 1 + static_cast<int>(rng.below(3)), rng));
    RatFun z(random_poly(f5, static_cast<int>(rng.below(4)), rng),
             random_monic(f5, 1 + static_cast<int>(rng.below(3)), rng));
    CHECK((x + y) * z == x * z + y * z);
    if (!x.is_zero()) CHECK(x * x.inv() == RatFun::of(P(f5, {1})));
  }
}

TEST_CASE("canonical polynomial order") {
  Field f3 = gf(3);
  CHECK(P(f3, {0, 1}) < P(f3, {0, 0, 1}));
  CHECK(P(f3, {0, 1, 1}) < P(f3, {0, 2, 1}));
  CHECK(!(P(f3, {0, 1}) < P(f3, {0, 1})));
}
