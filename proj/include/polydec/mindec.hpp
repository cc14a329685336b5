#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polydec/factor.hpp"

namespace polydec {

enum class Phase { BAlpha, Gamma };

struct Provenance {
  Phase phase = Phase::BAlpha;
  std::vector<int> indices;  // factor indices of the block (I_nu for Gamma)
  int nu = -1;               // Gamma only
};

// f = compose(g, h) with h normal, 2 <= deg h < deg f
struct Decomposition {
  UniPoly g, h;
  Provenance prov;
};

enum class CoprimeMode { Exact, Randomized };

struct CoprimeCheckConfig {
  int reps = 3;  // c
  uint64_t seed = 0;
  int kprime_degree = 0;  // [K' : F_p], >= 4 log2(16 n), multiple of [F : F_p]
  CoprimeMode mode = CoprimeMode::Exact;

  // defaults: exact for n <= 12, randomized above; c = 3
  static CoprimeCheckConfig for_input(Field f, int n, uint64_t seed = 0, int reps = 3,
                                      std::optional<CoprimeMode> mode = std::nullopt);
};

// which root variable the y of a BiPoly stands for when it enters a
// coprimality check
enum class RootVar { Alpha, Beta };

struct GammaGraph {
  int nu = -1;
  std::vector<std::pair<int, int>> edges;  // discovered non-coprime pairs (i, j)
  std::vector<int> component_of_1;         // I_nu, sorted, contains index 0
};

// One trial of the randomized check: specialize at a random point of the
// curve G = 0 over K' and test the resultant. True certifies coprimality.
bool coprime_trial(const BiPoly& G, const BiPoly& u, RootVar uv, const BiPoly& v,
                   RootVar vv, int kprime_degree, Rng& rng);

// True only if u, v are coprime in F(alpha, beta)[x]; false negatives on
// coprime inputs happen with probability at most (4n)^-1 per trial.
bool coprime_randomized(const BiPoly& G, const BiPoly& u, RootVar uv, const BiPoly& v,
                        RootVar vv, const CoprimeCheckConfig& cfg, uint64_t stream_tag);

// deterministic answer via Euclid in (F(alpha)[beta]/G)[x]
bool coprime_exact(const BiPoly& G, const BiPoly& u, RootVar uv, const BiPoly& v,
                   RootVar vv);

GammaGraph gamma_component(const PhiFactorization& fac, int nu,
                           const CoprimeCheckConfig& cfg, bool exact);

std::vector<Decomposition> b_alpha_phase(const PhiFactorization& fac, const UniPoly& f);
std::vector<Decomposition> gamma_phase(const PhiFactorization& fac, const UniPoly& f,
                                       const CoprimeCheckConfig& cfg);

std::vector<Decomposition> min_decompositions(const UniPoly& f,
                                              const CoprimeCheckConfig& cfg);

struct DecompositionNode {
  Decomposition dec;
  std::vector<DecompositionNode> children;  // decompositions of dec.g
};

// recursive minimal decompositions of every left component; leaves have an
// indecomposable g
std::vector<DecompositionNode> all_decompositions(const UniPoly& f,
                                                  const CoprimeCheckConfig& cfg);

}  // namespace polydec
