#pragma once

#include <cstdint>
#include <vector>

namespace polydec {

// Minimal unsigned bignum: just enough to build exponents like p^m and
// (p^m - 1)/2 and iterate over their bits in square-and-multiply loops.
class BigUint {
 public:
  BigUint() = default;

  static BigUint from_u64(uint64_t v) {
    BigUint b;
    while (v) {
      b.w_.push_back(static_cast<uint32_t>(v));
      v >>= 32;
    }
    return b;
  }

  // p^m for small p
  static BigUint prime_power(uint32_t p, uint32_t m) {
    BigUint b = from_u64(1);
    for (uint32_t i = 0; i < m; ++i) b.mul_small(p);
    return b;
  }

  void mul_small(uint32_t c) {
    uint64_t carry = 0;
    for (auto& limb : w_) {
      uint64_t t = static_cast<uint64_t>(limb) * c + carry;
      limb = static_cast<uint32_t>(t);
      carry = t >> 32;
    }
    while (carry) {
      w_.push_back(static_cast<uint32_t>(carry));
      carry >>= 32;
    }
  }

  void sub_small(uint32_t c) {
    uint64_t borrow = c;
    for (size_t i = 0; i < w_.size() && borrow; ++i) {
      uint64_t cur = w_[i];
      if (cur >= borrow) {
        w_[i] = static_cast<uint32_t>(cur - borrow);
        borrow = 0;
      } else {
        w_[i] = static_cast<uint32_t>((cur + (1ULL << 32)) - borrow);
        borrow = 1;
      }
    }
    trim();
  }

  void shr1() {
    uint32_t carry = 0;
    for (size_t i = w_.size(); i-- > 0;) {
      uint32_t cur = w_[i];
      w_[i] = (cur >> 1) | (carry << 31);
      carry = cur & 1;
    }
    trim();
  }

  bool is_zero() const { return w_.empty(); }

  size_t bit_length() const {
    if (w_.empty()) return 0;
    uint32_t top = w_.back();
    size_t bits = 0;
    while (top) {
      ++bits;
      top >>= 1;
    }
    return (w_.size() - 1) * 32 + bits;
  }

  bool bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= w_.size()) return false;
    return (w_[limb] >> (i % 32)) & 1;
  }

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }

  std::vector<uint32_t> w_;  // little-endian limbs
};

}  // namespace polydec
