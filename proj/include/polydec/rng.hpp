#pragma once

#include <cstdint>

namespace polydec {

// splitmix64; used for all randomized subroutines so a single --seed pins
// every random choice. Substreams are derived by mixing tags into the seed,
// which keeps parallel loop iterations schedule-independent.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
  // 2^-64 scale against the error budgets used here.
  uint64_t below(uint64_t bound) { return next() % bound; }

  Rng substream(uint64_t tag) const {
    uint64_t z = state_ ^ (tag * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    return Rng(z);
  }

 private:
  uint64_t state_;
};

}  // namespace polydec
