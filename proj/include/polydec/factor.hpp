#pragma once

#include <utility>
#include <vector>

#include "polydec/bipoly.hpp"
#include "polydec/poly.hpp"
#include "polydec/rng.hpp"

namespace polydec {

// Irreducible factorization of f(x) - f(y) over F(y):
//   (x - l_1(y)) ... (x - l_s(y)) * psi_{s+1} ... psi_r
// Linear parts come first in the factor index space 0..r-1, with l_1 = x at
// index 0; the nonlinear psi_i are monic in x and primitive.
struct PhiFactorization {
  int s = 0;
  int r = 0;
  std::vector<LinearPoly> linear_parts;
  std::vector<BiPoly> nonlinear;

  int deg_of_factor(int i) const {
    return i < s ? 1 : nonlinear[i - s].deg_x();
  }
  BiPoly factor_at(int i, Field f) const {
    if (i < s) {
      UniPoly ell = linear_parts[i].to_poly();
      return BiPoly(f, {-ell, UniPoly::constant(f->one())});
    }
    return nonlinear[i - s];
  }
};

UniPoly squarefree_part(const UniPoly& f);

// monic irreducible factors with multiplicities, canonically sorted
std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& f, Rng& rng);

// c with f(x) - f(c) squarefree; scans the base field in coordinate-lex
// order, then the smallest extensions
std::pair<FieldElement, Field> good_point(const UniPoly& f);

// Lift pairwise-coprime monic seed factors of Phi(x, c) to factors of Phi
// modulo (y - c)^precision.
std::vector<BiPoly> hensel_lift(const BiPoly& Phi, const FieldElement& c,
                                const std::vector<UniPoly>& seeds, int precision);

PhiFactorization factor_phi(const UniPoly& f, Rng& rng);

// roots of u in a minimal extension of its coefficient field
std::vector<std::pair<FieldElement, Field>> find_roots(const UniPoly& u, Rng& rng);

// all roots of a squarefree polynomial that splits over its own field
std::vector<FieldElement> split_roots(const UniPoly& u, Rng& rng);

UniPoly poly_powmod(const UniPoly& base, uint64_t e, const UniPoly& mod);

}  // namespace polydec
