#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polydec/factor.hpp"
#include "polydec/textio.hpp"

using namespace polydec;

namespace {

Field gf(uint32_t p, uint32_t k = 1) { return FiniteField::get(p, k); }

UniPoly P(Field f, std::vector<int64_t> c) { return UniPoly::from_ints(f, std::move(c)); }

BiPoly product_of(const PhiFactorization& fac, Field f) {
  BiPoly prod = BiPoly::from_x(UniPoly::constant(f->one()));
  for (int i = 0; i < fac.r; ++i) prod = prod * fac.factor_at(i, f);
  return prod;
}

}  // namespace

TEST_CASE("squarefree_part") {
  Field f5 = gf(5);
  CHECK(squarefree_part(P(f5, {1, -2, 1})) == P(f5, {-1, 1}));  // (x-1)^2
  Field f2 = gf(2);
  CHECK(squarefree_part(P(f2, {0, 0, 1})) == UniPoly::x(f2));  // x^2 = p-th power
  Field f3 = gf(3);
  UniPoly f = P(f3, {0, -1, 0, 1});  // x^3 - x, roots 0, 1, 2
  CHECK(squarefree_part(f) == f);
  for (int c = 0; c < 3; ++c) CHECK(f(f3->from_int(c)).is_zero());
  // mixed multiplicities across the characteristic
  UniPoly g = P(f3, {0, 1}).pow(3) * P(f3, {1, 1}).pow(2) * P(f3, {2, 1});
  CHECK(squarefree_part(g) == P(f3, {0, 1}) * P(f3, {1, 1}) * P(f3, {2, 1}));
}

TEST_CASE("factor_univariate") {
  Rng rng(53);
  Field f3 = gf(3);
  // x^9 - x = x (x-1) (x+1) times the three monic irreducible quadratics
  auto factors = factor_univariate(P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1}), rng);
  REQUIRE(factors.size() == 6);
  std::multiset<int> degs;
  UniPoly prod = UniPoly::constant(f3->one());
  for (const auto& [w, m] : factors) {
    CHECK(m == 1);
    CHECK(w.is_monic());
    degs.insert(w.degree());
    prod = prod * w;
  }
  CHECK(degs == std::multiset<int>{1, 1, 1, 2, 2, 2});
  CHECK(prod == P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1}));

  Field f5 = gf(5);
  auto f2 = factor_univariate(P(f5, {1, 0, 1}), rng);  // (x-2)(x-3), sorted
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].first == P(f5, {-3, 1}));
  CHECK(f2[1].first == P(f5, {-2, 1}));

  auto f3i = factor_univariate(P(f3, {1, 0, 1}), rng);  // irreducible
  REQUIRE(f3i.size() == 1);
  CHECK(f3i[0] == std::make_pair(P(f3, {1, 0, 1}), 1));

  // multiplicities, over an extension field
  Field f4 = gf(2, 2);
  UniPoly repeated =
      (UniPoly::x(f4) - UniPoly::constant(f4->gen())).pow(3) * P(f4, {1, 1, 1});
  auto f4f = factor_univariate(repeated, rng);
  UniPoly re = UniPoly::constant(f4->one());
  for (const auto& [w, m] : f4f) re = re * w.pow(m);
  CHECK(re == repeated);

  // 200 random polynomials re-multiply
  for (uint32_t p : {2u, 3u, 5u}) {
    Field fd = gf(p);
    for (int i = 0; i < 60; ++i) {
      UniPoly f = random_monic(fd, 1 + static_cast<int>(rng.below(10)), rng);
      UniPoly re2 = UniPoly::constant(fd->one());
      for (const auto& [w, m] : factor_univariate(f, rng)) {
        CHECK(w.is_monic());
        re2 = re2 * w.pow(m);
      }
      CHECK(re2 == f);
    }
  }
}

TEST_CASE("good_point") {
  Field f3 = gf(3);
  auto [c1, e1] = good_point(P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(e1 == f3);
  CHECK(c1.is_zero());  // f' = -1, the first element scanned works

  auto [c2, e2] = good_point(P(f3, {0, 0, 1}));
  CHECK(e2 == f3);
  CHECK(c2 == f3->from_int(1));  // c = 0 is critical, c = 1 is not

  // both values of f = x^4 + x^3 over GF(2) are critical; the scan escalates
  Field f2 = gf(2);
  UniPoly f = P(f2, {0, 0, 0, 1, 1});
  auto [c3, e3] = good_point(f);
  CHECK(e3->order() == 4);
  UniPoly fe = f.map_into(e3);
  UniPoly shifted = fe - UniPoly::constant(fe(c3));
  CHECK(gcd(shifted, fe.derivative()).is_constant());

  CHECK_THROWS_AS(good_point(P(f3, {0, 0, 0, 1})), Error);  // (x^3)' = 0
}

TEST_CASE("hensel_lift") {
  Field f5 = gf(5);
  BiPoly Phi = BiPoly::phi(P(f5, {0, 0, 1}));  // x^2 - y^2
  // precision 1 returns the seeds unchanged
  {
    std::vector<UniPoly> seeds{P(f5, {-1, 1}), P(f5, {1, 1})};
    auto lifted = hensel_lift(Phi, f5->one(), seeds, 1);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0] == BiPoly::from_x(seeds[0]));
    CHECK(lifted[1] == BiPoly::from_x(seeds[1]));
  }
  // x^2 - y at c = 1: the square-root series, checked by re-multiplication
  {
    BiPoly sq(f5, {-UniPoly::x(f5), UniPoly::zero(f5), P(f5, {1})});  // x^2 - y
    std::vector<UniPoly> seeds{P(f5, {-1, 1}), P(f5, {1, 1})};
    for (int prec : {2, 3, 5}) {
      auto lifted = hensel_lift(sq, f5->one(), seeds, prec);
      REQUIRE(lifted.size() == 2);
      for (const auto& l : lifted) CHECK(l.is_monic_x());
      CHECK(lifted[0].eval_y(f5->one()) == seeds[0]);
      CHECK(lifted[1].eval_y(f5->one()) == seeds[1]);
      // product congruent to Phi mod (y-1)^prec
      BiPoly err = lifted[0] * lifted[1] - sq;
      BiPoly shifted = err.shift_y(f5->one());  // congruence point moved to 0
      for (const auto& row : shifted.rows())
        for (int i = 0; i < prec; ++i) CHECK(row.coeff(i).is_zero());
    }
  }
  // seed preconditions
  {
    std::vector<UniPoly> bad{P(f5, {-1, 1}), P(f5, {-1, 1})};
    CHECK_THROWS_AS(hensel_lift(Phi, f5->one(), bad, 3), Error);
    std::vector<UniPoly> mismatch{P(f5, {2, 1}), P(f5, {1, 1})};
    CHECK_THROWS_AS(hensel_lift(Phi, f5->one(), mismatch, 3), Error);
  }
}

TEST_CASE("factor_phi golden example over GF(3)") {
  Field f3 = gf(3);
  Rng rng(59);
  UniPoly f = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  PhiFactorization fac = factor_phi(f, rng);
  CHECK(fac.s == 3);
  CHECK(fac.r == 6);
  REQUIRE(fac.linear_parts.size() == 3);
  CHECK(fac.linear_parts[0] == LinearPoly::identity(f3));
  // roots are y, y+1, y+2
  std::set<std::pair<uint32_t, uint32_t>> lin;
  for (const auto& l : fac.linear_parts)
    lin.insert({l.a().coords()[0], l.b().coords()[0]});
  CHECK(lin == std::set<std::pair<uint32_t, uint32_t>>{{1, 0}, {1, 1}, {1, 2}});

  // the three quadratic factors, verbatim
  std::set<BiPoly> expected{
      parse_bipoly("x^2 + y*x + y^2 + 1", f3),
      parse_bipoly("x^2 + (y+1)*x + y^2 - y - 1", f3),
      parse_bipoly("x^2 + (y-1)*x + y^2 + y - 1", f3),
  };
  std::set<BiPoly> got(fac.nonlinear.begin(), fac.nonlinear.end());
  CHECK(got == expected);
  CHECK(product_of(fac, f3) == BiPoly::phi(f));
}

TEST_CASE("factor_phi small cases") {
  Rng rng(61);
  {
    Field f5 = gf(5);
    PhiFactorization fac = factor_phi(P(f5, {0, 0, 1}), rng);
    CHECK(fac.s == 2);
    CHECK(fac.r == 2);  // (x - y)(x + y)
    std::set<std::pair<uint32_t, uint32_t>> lin;
    for (const auto& l : fac.linear_parts)
      lin.insert({l.a().coords()[0], l.b().coords()[0]});
    CHECK(lin == std::set<std::pair<uint32_t, uint32_t>>{{1, 0}, {4, 0}});
  }
  {
    // cube roots of unity are in GF(7): (x - y)(x - 2y)(x - 4y)
    Field f7 = gf(7);
    PhiFactorization fac = factor_phi(P(f7, {0, 0, 0, 1}), rng);
    CHECK(fac.s == 3);
    CHECK(fac.r == 3);
    std::set<uint32_t> slopes;
    for (const auto& l : fac.linear_parts) {
      CHECK(l.b().is_zero());
      slopes.insert(l.a().coords()[0]);
    }
    CHECK(slopes == std::set<uint32_t>{1, 2, 4});
  }
  {
    // x^9 - x splits completely over GF(9): s = n
    Field f9 = gf(3, 2);
    UniPoly f = P(f9, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
    PhiFactorization fac = factor_phi(f, rng);
    CHECK(fac.s == 9);
    CHECK(fac.r == 9);
    CHECK(product_of(fac, f9) == BiPoly::phi(f));
  }
  {
    // good point in an extension: x^4 + x^3 over GF(2)
    Field f2 = gf(2);
    UniPoly f = P(f2, {0, 0, 0, 1, 1});
    PhiFactorization fac = factor_phi(f, rng);
    CHECK(product_of(fac, f2) == BiPoly::phi(f));
    CHECK(fac.s >= 1);
  }
}

TEST_CASE("factor_phi re-multiplication on random inputs") {
  Rng rng(67);
  int checked = 0;
  for (uint32_t p : {2u, 3u, 5u}) {
    Field fd = gf(p);
    for (int i = 0; i < 34; ++i) {
      UniPoly f = random_monic(fd, 2 + static_cast<int>(rng.below(11)), rng);
      if (f.derivative().is_zero()) continue;
      PhiFactorization fac = factor_phi(f, rng);
      CHECK(product_of(fac, fd) == BiPoly::phi(f));
      CHECK(fac.s >= 1);
      int degsum = 0;
      for (int j = 0; j < fac.r; ++j) degsum += fac.deg_of_factor(j);
      CHECK(degsum == f.degree());
      // irreducibility probe: each nonlinear factor specializes squarefree
      // at the good point of f
      auto [c, ext] = good_point(f);
      if (ext == fd) {
        for (const auto& psi : fac.nonlinear) {
          UniPoly spec = psi.eval_y(c);
          CHECK(spec.degree() == psi.deg_x());
          CHECK(gcd(spec, spec.derivative()).is_constant());
        }
      }
      ++checked;
    }
  }
  CHECK(checked >= 80);
}

TEST_CASE("factor_phi rejects bad inputs") {
  Field f3 = gf(3);
  Rng rng(71);
  CHECK_THROWS_AS(factor_phi(P(f3, {0, 0, 0, 1}), rng), Error);          // f' = 0
  CHECK_THROWS_AS(factor_phi(P(f3, {0, 2, 0, 2}), rng), Error);          // not monic
  CHECK_THROWS_AS(factor_phi(P(f3, {0, 1}), rng), Error);  // degree too small
}
