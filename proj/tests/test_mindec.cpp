#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polydec/mindec.hpp"
#include "polydec/oracle.hpp"
#include "polydec/textio.hpp"

using namespace polydec;

namespace {

Field gf(uint32_t p, uint32_t k = 1) { return FiniteField::get(p, k); }

UniPoly P(Field f, std::vector<int64_t> c) { return UniPoly::from_ints(f, std::move(c)); }

CoprimeCheckConfig exact_cfg(Field f, int n, uint64_t seed = 0) {
  return CoprimeCheckConfig::for_input(f, n, seed, 3, CoprimeMode::Exact);
}

std::set<UniPoly> right_components(const std::vector<Decomposition>& decs) {
  std::set<UniPoly> out;
  for (const auto& d : decs) out.insert(d.h);
  return out;
}

}  // namespace

TEST_CASE("config degree bound") {
  Field f3 = gf(3);
  auto cfg = CoprimeCheckConfig::for_input(f3, 9);
  // 4 log2(16*9) = 28.68..., rounded to 29
  CHECK(cfg.kprime_degree == 29);
  CHECK(cfg.mode == CoprimeMode::Exact);
  Field f9 = gf(3, 2);
  CHECK(CoprimeCheckConfig::for_input(f9, 9).kprime_degree == 30);  // multiple of 2
  CHECK(CoprimeCheckConfig::for_input(f3, 16).mode == CoprimeMode::Randomized);
  CHECK_THROWS_AS(CoprimeCheckConfig::for_input(f3, 9, 0, 2), Error);
}

TEST_CASE("golden: x^9 - x over GF(3) has exactly two decompositions") {
  Field f3 = gf(3);
  UniPoly f = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  auto decs = min_decompositions(f, exact_cfg(f3, 9));
  REQUIRE(decs.size() == 2);
  UniPoly plus = P(f3, {0, 1, 0, 1});    // x^3 + x
  UniPoly minus = P(f3, {0, -1, 0, 1});  // x^3 - x
  // canonical order sorts h = x^3 + x (coefficient 1) before x^3 - x
  CHECK(decs[0].g == minus);
  CHECK(decs[0].h == plus);
  CHECK(decs[1].g == plus);
  CHECK(decs[1].h == minus);
  // one from each phase
  CHECK(decs[0].prov.phase == Phase::Gamma);
  CHECK(decs[1].prov.phase == Phase::BAlpha);
}

TEST_CASE("golden: x^9 - x over GF(9) has four decompositions") {
  Field f9 = gf(3, 2);
  UniPoly f = P(f9, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  auto decs = min_decompositions(f, exact_cfg(f9, 9));
  REQUIRE(decs.size() == 4);
  // right components are x^3 - d x for d the four squares of GF(9)*
  std::set<FieldElement> squares;
  for (uint64_t i = 1; i < 9; ++i) {
    FieldElement e = f9->element_at(i);
    squares.insert(e * e);
  }
  CHECK(squares.size() == 4);
  std::set<UniPoly> expected;
  for (const auto& d : squares) {
    UniPoly h = UniPoly::monomial(f9, 3, f9->one()) - UniPoly::x(f9) * d;
    expected.insert(h);
  }
  CHECK(right_components(decs) == expected);
}

TEST_CASE("golden: (x^3 - x)^2 over GF(3) has four decompositions") {
  Field f3 = gf(3);
  UniPoly f = compose(P(f3, {0, 0, 1}), P(f3, {0, -1, 0, 1}));
  auto decs = min_decompositions(f, exact_cfg(f3, 6));
  REQUIRE(decs.size() == 4);
  std::set<UniPoly> expected{
      P(f3, {0, -1, 0, 1}),  // x^3 - x
      P(f3, {0, 0, 1}),      // x^2
      P(f3, {0, -1, 1}),     // x^2 - x
      P(f3, {0, -2, 1}),     // x^2 - 2x
  };
  CHECK(right_components(decs) == expected);
  // all from the B_alpha phase: f - t splits over F(alpha)
  for (const auto& d : decs) CHECK(d.prov.phase == Phase::BAlpha);
}

TEST_CASE("coprimality checks on the curve beta^2 = alpha") {
  Field f5 = gf(5);
  // G = x^2 - y in the (beta-slot, alpha-slot) layout
  BiPoly G(f5, {-UniPoly::x(f5), UniPoly::zero(f5), P(f5, {1})});
  BiPoly u_sq = G;                                            // x^2 - alpha
  BiPoly v_lin(f5, {-UniPoly::x(f5), P(f5, {1})});            // x - beta
  BiPoly u_lin(f5, {-UniPoly::x(f5), P(f5, {1})});            // x - alpha

  // beta^2 = alpha makes x - beta divide x^2 - alpha
  CHECK(!coprime_exact(G, u_sq, RootVar::Alpha, v_lin, RootVar::Beta));
  // x - alpha and x - beta are coprime on this curve
  CHECK(coprime_exact(G, u_lin, RootVar::Alpha, v_lin, RootVar::Beta));
  // identical inputs share a factor
  CHECK(!coprime_exact(G, u_lin, RootVar::Alpha, u_lin, RootVar::Alpha));

  auto cfg = exact_cfg(f5, 9, 12345);
  // randomized: never claims coprime on the non-coprime pair
  for (uint64_t tag = 0; tag < 50; ++tag)
    CHECK(!coprime_randomized(G, u_sq, RootVar::Alpha, v_lin, RootVar::Beta, cfg, tag));
  for (uint64_t tag = 0; tag < 50; ++tag)
    CHECK(!coprime_randomized(G, u_lin, RootVar::Alpha, u_lin, RootVar::Alpha, cfg, tag));
  // and certifies the coprime pair with overwhelming probability
  int hits = 0;
  for (uint64_t tag = 0; tag < 50; ++tag)
    hits += coprime_randomized(G, u_lin, RootVar::Alpha, v_lin, RootVar::Beta, cfg, tag);
  CHECK(hits == 50);
}

TEST_CASE("coprime_exact on the golden factorization") {
  Field f3 = gf(3);
  Rng rng(73);
  UniPoly f = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  PhiFactorization fac = factor_phi(f, rng);
  REQUIRE(fac.s == 3);
  // psi_1 with alpha vs psi_1 with beta substituted share a root
  const BiPoly& psi = fac.nonlinear[0];
  CHECK(!coprime_exact(psi, psi, RootVar::Alpha, psi, RootVar::Beta));
  // distinct quadratics with distinct root variables
  CHECK(coprime_exact(psi, fac.nonlinear[1], RootVar::Alpha, fac.nonlinear[1],
                      RootVar::Beta) == false);
  // one-sidedness: randomized True implies exact True on all pairs
  auto cfg = exact_cfg(f3, 9, 99);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      bool rnd = coprime_randomized(psi, fac.nonlinear[i], RootVar::Alpha,
                                    fac.nonlinear[j], RootVar::Beta, cfg,
                                    static_cast<uint64_t>(i * 3 + j));
      bool ex = coprime_exact(psi, fac.nonlinear[i], RootVar::Alpha, fac.nonlinear[j],
                              RootVar::Beta);
      if (rnd) CHECK(ex);
    }
  }
}

TEST_CASE("one-sidedness across random gamma graphs") {
  // whenever the randomized check certifies coprimality, the exact check
  // agrees, across all factor pairs of many curves
  Rng rng(113);
  int pairs_checked = 0;
  for (uint32_t p : {2u, 3u, 5u}) {
    Field fd = gf(p);
    for (int it = 0; it < 6; ++it) {
      UniPoly g = random_normal(fd, 3, rng);
      UniPoly h = random_normal(fd, 3, rng);
      UniPoly f = compose(g, h);
      if (f.derivative().is_zero()) continue;
      PhiFactorization fac = factor_phi(f, rng);
      if (fac.r == fac.s) continue;
      auto cfg = CoprimeCheckConfig::for_input(fd, 9, 515 + it, 3, CoprimeMode::Randomized);
      for (int nu = fac.s; nu < fac.r; ++nu) {
        const BiPoly& G = fac.nonlinear[nu - fac.s];
        for (int i = 0; i < fac.r; ++i) {
          for (int j = 0; j < fac.r; ++j) {
            BiPoly u = fac.factor_at(i, fd);
            BiPoly v = fac.factor_at(j, fd);
            bool rnd = coprime_randomized(G, u, RootVar::Alpha, v, RootVar::Beta, cfg,
                                          static_cast<uint64_t>((nu * 64 + i) * 64 + j));
            if (rnd)
              CHECK(coprime_exact(G, u, RootVar::Alpha, v, RootVar::Beta));
            ++pairs_checked;
          }
        }
      }
    }
  }
  CHECK(pairs_checked > 100);
}

TEST_CASE("gamma components of the golden example") {
  Field f3 = gf(3);
  Rng rng(79);
  UniPoly f = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  PhiFactorization fac = factor_phi(f, rng);
  auto cfg = exact_cfg(f3, 9);
  for (int nu = 3; nu < 6; ++nu) {
    GammaGraph g = gamma_component(fac, nu, cfg, true);
    CHECK(g.nu == nu);
    REQUIRE(g.component_of_1.size() == 2);
    CHECK(g.component_of_1[0] == 0);
    CHECK(g.component_of_1[1] >= 3);  // one of the quadratics
  }
}

TEST_CASE("b_alpha phase on the splitting case") {
  Field f9 = gf(3, 2);
  Rng rng(83);
  UniPoly f = P(f9, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  PhiFactorization fac = factor_phi(f, rng);
  CHECK(fac.s == 9);
  auto decs = b_alpha_phase(fac, f);
  CHECK(decs.size() == 4);  // the gamma phase has nothing to add
  auto gamma = gamma_phase(fac, f, exact_cfg(f9, 9));
  CHECK(gamma.empty());
}

TEST_CASE("indecomposable inputs give the empty list") {
  Field f3 = gf(3);
  // x^4 + x over GF(3): no degree-2 right component (oracle agrees)
  UniPoly f = P(f3, {0, 1, 0, 0, 1});
  CHECK(minimal_right_components(f).empty());
  CHECK(min_decompositions(f, exact_cfg(f3, 4)).empty());

  // prime degree is indecomposable outright
  UniPoly g = P(f3, {0, 1, 1, 0, 0, 1});
  CHECK(min_decompositions(g, exact_cfg(f3, 5)).empty());
}

TEST_CASE("input validation") {
  Field f3 = gf(3);
  auto cfg = exact_cfg(f3, 9);
  CHECK_THROWS_AS(min_decompositions(P(f3, {0, 2, 0, 2}), cfg), Error);  // not monic
  CHECK_THROWS_AS(min_decompositions(P(f3, {0, 1}), cfg), Error);        // deg 1
  CHECK_THROWS_AS(min_decompositions(UniPoly::monomial(f3, 9, f3->one()), cfg),
                  Error);  // f' = 0
}

TEST_CASE("soundness and bounds on random decomposable inputs") {
  Rng rng(89);
  for (uint32_t p : {2u, 3u, 5u}) {
    Field fd = gf(p);
    for (int i = 0; i < 12; ++i) {
      UniPoly g = random_normal(fd, 2 + static_cast<int>(rng.below(3)), rng);
      UniPoly h = random_normal(fd, 2 + static_cast<int>(rng.below(3)), rng);
      UniPoly f = compose(g, h);
      if (f.derivative().is_zero()) continue;
      auto decs = min_decompositions(f, exact_cfg(fd, f.degree(), 1000 + i));
      CHECK(!decs.empty());
      int n = f.degree();
      for (const auto& d : decs) {
        CHECK(compose(d.g, d.h) == f);
        CHECK(d.h.is_normal());
        CHECK(n % d.h.degree() == 0);
        CHECK(d.h.degree() >= 2);
        CHECK(d.h.degree() < n);
      }
      // pairwise block intersections are exactly {alpha}: index 0
      for (size_t a = 0; a < decs.size(); ++a) {
        for (size_t b = a + 1; b < decs.size(); ++b) {
          std::vector<int> inter;
          std::set_intersection(decs[a].prov.indices.begin(), decs[a].prov.indices.end(),
                                decs[b].prov.indices.begin(), decs[b].prov.indices.end(),
                                std::back_inserter(inter));
          CHECK(inter == std::vector<int>{0});
        }
      }
      // sum over blocks of (|block roots| - 1) <= n - 1
      int total = 0;
      for (const auto& d : decs) total += d.h.degree() - 1;
      CHECK(total <= n - 1);
    }
  }
}

TEST_CASE("randomized mode agrees with exact mode end to end") {
  Rng rng(127);
  int compared = 0;
  for (uint32_t p : {2u, 3u, 5u}) {
    Field fd = gf(p);
    for (int i = 0; i < 5; ++i) {
      UniPoly g = random_normal(fd, 2 + static_cast<int>(rng.below(2)), rng);
      UniPoly h = random_normal(fd, 3, rng);
      UniPoly f = compose(g, h);
      if (f.derivative().is_zero()) continue;
      auto ex = min_decompositions(f, exact_cfg(fd, f.degree(), 31));
      auto rn = min_decompositions(
          f, CoprimeCheckConfig::for_input(fd, f.degree(), 31, 3, CoprimeMode::Randomized));
      REQUIRE(ex.size() == rn.size());
      for (size_t j = 0; j < ex.size(); ++j) {
        CHECK(ex[j].g == rn[j].g);
        CHECK(ex[j].h == rn[j].h);
      }
      ++compared;
    }
  }
  CHECK(compared >= 10);
}

TEST_CASE("conjugation invariance of the degree profile") {
  Rng rng(97);
  Field f3 = gf(3);
  for (int i = 0; i < 8; ++i) {
    UniPoly g = random_normal(f3, 3, rng);
    UniPoly h = random_normal(f3, 3, rng);
    UniPoly f = compose(g, h);
    if (f.derivative().is_zero()) continue;
    FieldElement w = f3->random_element(rng);
    UniPoly fw = conjugate(f, w);
    auto d1 = min_decompositions(f, exact_cfg(f3, 9, 7));
    auto d2 = min_decompositions(fw, exact_cfg(f3, 9, 7));
    std::multiset<std::pair<int, int>> p1, p2;
    for (const auto& d : d1) p1.insert({d.g.degree(), d.h.degree()});
    for (const auto& d : d2) p2.insert({d.g.degree(), d.h.degree()});
    CHECK(p1 == p2);
  }
}

TEST_CASE("all_decompositions") {
  Field f3 = gf(3);
  // x^8 over GF(3): chains of x^2 and x^4 splits, every chain composes to x^8
  UniPoly f = UniPoly::monomial(f3, 8, f3->one());
  auto tree = all_decompositions(f, exact_cfg(f3, 8));
  REQUIRE(!tree.empty());
  // walk chains: composing h's up each path times the leaf g equals f
  struct Walker {
    UniPoly target;
    void walk(const DecompositionNode& node, UniPoly suffix) {
      // suffix = composition of the h's below this node's parent
      UniPoly here = compose(node.dec.h, suffix);
      if (node.children.empty()) {
        CHECK(compose(node.dec.g, here) == target);
      } else {
        for (const auto& c : node.children) walk(c, here);
      }
    }
  } walker{f};
  for (const auto& node : tree) walker.walk(node, UniPoly::x(f3));

  // x^9 - x: depth 1, prime-degree components
  UniPoly f2 = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
  auto tree2 = all_decompositions(f2, exact_cfg(f3, 9));
  REQUIRE(tree2.size() == 2);
  for (const auto& node : tree2) CHECK(node.children.empty());

  // a triple composition admits a chain of length three
  UniPoly a = P(f3, {0, 1, 1});
  UniPoly b = P(f3, {0, 0, 1});
  UniPoly c = P(f3, {0, 1, 0, 1});
  UniPoly f3x = compose(a, compose(b, c));
  REQUIRE(!f3x.derivative().is_zero());
  auto tree3 = all_decompositions(f3x, exact_cfg(f3, f3x.degree()));
  bool depth2 = false;
  for (const auto& node : tree3)
    if (!node.children.empty()) depth2 = true;
  CHECK(depth2);
}
