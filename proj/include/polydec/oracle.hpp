#pragma once

#include <utility>
#include <vector>

#include "polydec/poly.hpp"

namespace polydec {

struct OracleOptions {
  uint64_t budget = 1000000;  // max candidates per degree
  bool parallel = true;
};

// Exhaustive ground truth: every normal h of degree d (q^(d-1) candidates)
// with a left component, found by the generalized Taylor expansion.
std::vector<std::pair<UniPoly, UniPoly>> enumerate_right_components(
    const UniPoly& f, int d, const OracleOptions& opt = {});

// single-threaded reference used to validate the parallel kernel
std::vector<std::pair<UniPoly, UniPoly>> enumerate_right_components_serial(
    const UniPoly& f, int d, const OracleOptions& opt = {});

// right components that are themselves indecomposable, across all divisors
std::vector<UniPoly> minimal_right_components(const UniPoly& f,
                                              const OracleOptions& opt = {});

bool oracle_indecomposable(const UniPoly& f, const OracleOptions& opt = {});

struct DegreeBound {
  int d = 0;
  int count = 0;
  int bound = 0;
  bool tight = false;
};

struct BoundsReport {
  int n = 0;
  int total = 0;
  int total_bound = 0;
  bool total_tight = false;
  std::vector<DegreeBound> per_degree;
};

// checks the two counting bounds; throws BoundViolated on failure
BoundsReport audit_bounds(const UniPoly& f, const std::vector<UniPoly>& components);

}  // namespace polydec
