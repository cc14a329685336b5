#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polydec/error.hpp"

namespace polydec {

class FiniteField;

// Fields are interned: one canonical immutable object per (p, k, modulus),
// alive for the whole process. Elements hold a plain pointer.
using Field = const FiniteField*;

// An element of GF(p^k) in power-basis coordinates c[0] + c[1] z + ... ,
// each residue in [0, p). Immutable in spirit; arithmetic returns new
// values. Coordinates are stored inline for small k, so elements of the
// desk-scale fields never touch the heap.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, std::vector<uint32_t> coords);

  Field field() const { return field_; }
  std::span<const uint32_t> coords() const { return {cdata(), k_}; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(uint64_t e) const;
  // a -> a^p, the absolute Frobenius
  FieldElement frobenius() const;
  FieldElement frobenius_power(uint32_t j) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // coordinate-lexicographic order (c[0] compared first)
  bool operator<(const FieldElement& o) const;

  std::string to_string() const;  // residue for k = 1, else polynomial in z

 private:
  friend class FiniteField;
  static constexpr uint32_t kInline = 4;

  // uninitialized-storage constructor for arithmetic results
  FieldElement(Field f, uint32_t k) : field_(f), k_(k) {
    if (k_ > kInline) big_.resize(k_);
  }
  const uint32_t* cdata() const { return k_ <= kInline ? small_.data() : big_.data(); }
  uint32_t* mdata() { return k_ <= kInline ? small_.data() : big_.data(); }

  Field field_ = nullptr;
  uint32_t k_ = 0;
  std::array<uint32_t, kInline> small_{};
  std::vector<uint32_t> big_;
};

class FiniteField {
 public:
  // field_create. modulus, when given, is the coefficient vector
  // (little-endian, length k+1) of a monic irreducible over GF(p).
  // When absent and k > 1, the canonical modulus is the smallest monic
  // irreducible of degree k, comparing coefficient tuples from the
  // z^(k-1) coefficient down.
  static Field get(uint32_t p, uint32_t k,
                   const std::vector<uint32_t>* modulus = nullptr);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  // monic modulus of degree k; empty vector for k == 1
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  bool order_fits_u64() const;
  uint64_t order() const;  // p^k, requires order_fits_u64()

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(int64_t v) const;                  // v mod p, scalar
  FieldElement from_coords(std::vector<uint32_t> c) const;  // length <= k
  FieldElement gen() const;  // the class of z (requires k > 1)

  // enumeration in coordinate-lexicographic order, index in [0, p^k)
  FieldElement element_at(uint64_t index) const;
  uint64_t index_of(const FieldElement& a) const;

  FieldElement random_element(class Rng& rng) const;

  std::string spec_string() const;  // "p", "p^k" or "p^k/modulus"

 private:
  friend class FieldElement;
  FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

  uint32_t p_;
  uint32_t k_;
  std::vector<uint32_t> modulus_;  // length k+1 when k > 1, else empty
};

// Deterministic embedding GF(p^k) -> GF(p^K) for k | K: the generator of the
// source is mapped to the coordinate-lexicographically smallest root of the
// source modulus in the target. Cached per field pair. The choice is
// canonical per (source, target) pair but not transitive: composing
// F -> K' -> K may differ from F -> K by a conjugate, so data that must live
// on one common curve has to travel along a single chain of embeddings.
FieldElement embed(const FieldElement& a, Field target);

// Inverse of embed on its image. Returns nullopt if b is not in the image.
std::optional<FieldElement> pull_back(const FieldElement& b, Field source);

bool is_prime(uint64_t n);

}  // namespace polydec
