#pragma once

#include <optional>
#include <vector>

#include "polydec/oracle.hpp"
#include "polydec/poly.hpp"
#include "polydec/rng.hpp"

namespace polydec {

// one critical value c (gcd(f - c, f') != 1) with the multiplicity pattern of
// the roots of f - c in the algebraic closure
struct CriticalValue {
  FieldElement c;                   // lives in `field`
  Field field;                      // extension containing the roots of f'
  std::vector<int> multiplicities;  // one entry per distinct root of f - c
};

std::vector<CriticalValue> critical_values(const UniPoly& f, Rng& rng);

enum class TaxonomyCase { I, II };

struct CaseIRecord {
  FieldElement a, b;  // g = x(x^l - a)^m, h = x(x^l - b)^m
};

struct CaseIIRecord {
  int r = 0;  // in {m, p - m}
  FieldElement a, b;
  UniPoly q, qtilde;  // h = x^(p-r) q, h - a = (x - b)^r qtilde
};

struct TaxonomyReport {
  TaxonomyCase taxonomy_case = TaxonomyCase::I;
  FieldElement w;  // conjugation shift
  int m = 0;
  int ell = 0;  // (p-1)/m, Case I only
  std::vector<CaseIRecord> case1;
  std::vector<CaseIIRecord> case2;
  UniPoly conjugated;  // (x - f(w)) o f o (x + w)
  std::vector<std::pair<UniPoly, UniPoly>> conj_decompositions;
};

// classifies a normal degree-p^2 polynomial with >= 2 normal decompositions
// into exactly one of the two cases
TaxonomyReport classify_p2(const UniPoly& f, const OracleOptions& opt = {});

struct FamilyParams {
  int eps = 0;          // 0 or 1
  FieldElement u, s;    // nonzero
  int ell = 1;          // positive divisor of p - 1
  int m = 0;            // (p - 1) / ell, filled by the generator
};

struct FamilyDecomposition {
  FieldElement t;  // root of x^(p+1) - eps u x + u in F
  UniPoly g, h;
};

struct FamilyOutput {
  UniPoly f;
  std::vector<FamilyDecomposition> decompositions;
};

// f = x(x^(l(p+1)) - eps u s^p x^l + u s^(p+1))^m and one decomposition per
// root t in F of x^(p+1) - eps u x + u
FamilyOutput gen_case1_family(Field field, const FamilyParams& params);

// extraction of family parameters from one Case I pair; the round-trip
// reproduces the conjugated polynomial
FamilyParams case1_params_from_pair(const FieldElement& a, const FieldElement& b, int ell);

enum class CensusMode { Exhaustive, Sample };

struct CensusRow {
  UniPoly f;
  int n_decompositions = 0;
  TaxonomyCase taxonomy_case = TaxonomyCase::I;
  int m = 0;
  int ell_or_r = 0;
  bool parametrization_ok = false;
};

struct CensusResult {
  uint64_t composites_seen = 0;
  uint64_t distinct_f = 0;
  uint64_t derivative_zero = 0;
  uint64_t multi_collision = 0;  // classified rows
  uint64_t case1_count = 0;
  uint64_t case2_count = 0;
  std::vector<CensusRow> rows;
};

// enumerate (or sample) composites of normal degree-p pairs over `field`,
// classify every multi-decomposition f with f' != 0
CensusResult census_p2(Field field, CensusMode mode, uint64_t samples, uint64_t seed,
                       const OracleOptions& opt = {});

}  // namespace polydec
