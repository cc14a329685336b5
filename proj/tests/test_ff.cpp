#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydec/factor.hpp"
#include "polydec/ff.hpp"
#include "polydec/rng.hpp"

using namespace polydec;

namespace {

Field gf(uint32_t p, uint32_t k = 1) { return FiniteField::get(p, k); }

Field gf9_zz2() {
  std::vector<uint32_t> mod{2, 1, 1};  // z^2 + z + 2
  return FiniteField::get(3, 2, &mod);
}

}  // namespace

TEST_CASE("field_create basics") {
  Field f3 = gf(3);
  CHECK(f3->p() == 3);
  CHECK(f3->k() == 1);
  CHECK(f3->order() == 3);

  // z^2 + z + 2 has no root in GF(3): 0,1,2 evaluate to 2, 1, 2
  for (int z = 0; z < 3; ++z) CHECK((z * z + z + 2) % 3 != 0);
  Field f9 = gf9_zz2();
  CHECK(f9->order() == 9);
  // zeta^2 = -zeta + 1... in coordinates: zeta^2 + zeta + 2 = 0
  FieldElement zeta = f9->gen();
  CHECK((zeta * zeta + zeta + f9->from_int(2)).is_zero());

  CHECK_THROWS_AS(FiniteField::get(4, 1), Error);
  try {
    FiniteField::get(4, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
    CHECK(!e.internal());
  }

  // reducible modulus is rejected: z^2 + 2z + 1 = (z + 1)^2
  std::vector<uint32_t> bad{1, 2, 1};
  CHECK_THROWS_AS(FiniteField::get(3, 2, &bad), Error);

  std::vector<uint32_t> wrong_degree{1, 1};
  CHECK_THROWS_AS(FiniteField::get(3, 2, &wrong_degree), Error);

  // interning: same data, same object
  CHECK(gf(3) == gf(3));
  CHECK(gf9_zz2() == gf9_zz2());
  CHECK(gf(3, 2) != gf9_zz2());  // canonical modulus z^2 + 1 differs
}

TEST_CASE("inverse") {
  Field f5 = gf(5);
  CHECK(f5->from_int(2).inv() == f5->from_int(3));
  CHECK(f5->one().inv() == f5->one());

  Field f9 = gf9_zz2();
  FieldElement zeta = f9->gen();
  FieldElement e = zeta.inv();
  CHECK((zeta * e).is_one());
  CHECK(f9->one().inv() == f9->one());
  CHECK_THROWS_AS(f9->zero().inv(), Error);
}

TEST_CASE("embed") {
  Field f3 = gf(3);
  Field f9 = gf9_zz2();
  // prime subfield is fixed
  CHECK(embed(f3->from_int(2), f9) == f9->from_int(2));
  CHECK(embed(f3->zero(), f9).is_zero());
  CHECK(embed(f3->one(), f9).is_one());

  // embed then frobenius^(source k) equals embed
  Field f81 = gf(3, 4);
  FieldElement zeta = f9->gen();
  FieldElement img = embed(zeta, f81);
  CHECK(img.frobenius_power(2) == img);
  CHECK(img != img.frobenius());

  // the image satisfies the source modulus in GF(81)
  CHECK((img * img + img + f81->from_int(2)).is_zero());

  // ring homomorphism on random pairs, plus injectivity via pull_back
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    FieldElement a = f9->random_element(rng), b = f9->random_element(rng);
    CHECK(embed(a + b, f81) == embed(a, f81) + embed(b, f81));
    CHECK(embed(a * b, f81) == embed(a, f81) * embed(b, f81));
    auto back = pull_back(embed(a, f81), f9);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  // something outside the image pulls back to nothing
  int misses = 0;
  for (uint64_t i = 0; i < f81->order(); ++i) {
    if (!pull_back(f81->element_at(i), f9)) ++misses;
  }
  CHECK(misses == 81 - 9);

  CHECK_THROWS_AS(embed(f9->gen(), gf(3, 3)), Error);  // 2 does not divide 3
  CHECK_THROWS_AS(embed(f3->one(), gf(5)), Error);
}

TEST_CASE("embedding is deterministic (smallest root)") {
  Field f9 = gf9_zz2();
  Field f81 = gf(3, 4);
  // recompute the root set independently: all roots of z^2+z+2 in GF(81),
  // the chosen image must be the coordinate-lexicographically smallest
  std::vector<FieldElement> roots;
  for (uint64_t i = 0; i < f81->order(); ++i) {
    FieldElement x = f81->element_at(i);
    if ((x * x + x + f81->from_int(2)).is_zero()) roots.push_back(x);
  }
  REQUIRE(roots.size() == 2);
  FieldElement img = embed(f9->gen(), f81);
  CHECK(img == *std::min_element(roots.begin(), roots.end()));
}

TEST_CASE("find_roots") {
  Rng rng(7);
  Field f3 = gf(3);
  // x^2 + 1 has no root mod 3; any root i in GF(9) satisfies i^2 = -1
  UniPoly u = UniPoly::from_ints(f3, {1, 0, 1});
  auto roots = find_roots(u, rng);
  REQUIRE(roots.size() == 2);
  for (const auto& [r, fld] : roots) {
    CHECK(fld->order() == 9);
    CHECK((r * r + fld->one()).is_zero());
  }

  Field f7 = gf(7);
  auto r2 = find_roots(UniPoly::from_ints(f7, {-5, 1}), rng);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].first == f7->from_int(5));
  CHECK(r2[0].second == f7);

  Field f5 = gf(5);
  auto r3 = find_roots(UniPoly::from_ints(f5, {-1, 0, 1}), rng);
  REQUIRE(r3.size() == 2);
  CHECK(r3[0].first == f5->from_int(1));
  CHECK(r3[1].first == f5->from_int(4));
}

TEST_CASE("field axioms on random triples") {
  Rng rng(99);
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    for (uint32_t k : {1u, 2u, 3u}) {
      Field f = gf(p, k);
      for (int i = 0; i < 40; ++i) {
        FieldElement a = f->random_element(rng);
        FieldElement b = f->random_element(rng);
        FieldElement c = f->random_element(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == f->zero());
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      }
    }
  }
}

TEST_CASE("frobenius is a field automorphism of order k") {
  Rng rng(3);
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    for (uint32_t k : {1u, 2u, 3u}) {
      Field f = gf(p, k);
      for (int i = 0; i < 30; ++i) {
        FieldElement a = f->random_element(rng), b = f->random_element(rng);
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        CHECK(a.frobenius_power(k) == a);
      }
    }
  }
}

TEST_CASE("inv is an involution, exhaustively for q <= 49") {
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3},
           {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}, {47, 1}}) {
    Field f = gf(p, k);
    for (uint64_t i = 1; i < f->order(); ++i) {
      FieldElement a = f->element_at(i);
      CHECK(a.inv().inv() == a);
    }
  }
}

TEST_CASE("element enumeration is coordinate-lexicographic") {
  Field f9 = gf(3, 2);
  for (uint64_t i = 0; i + 1 < f9->order(); ++i)
    CHECK(f9->element_at(i) < f9->element_at(i + 1));
  for (uint64_t i = 0; i < f9->order(); ++i)
    CHECK(f9->index_of(f9->element_at(i)) == i);
}
