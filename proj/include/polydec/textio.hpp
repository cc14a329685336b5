#pragma once

#include <string>

#include "polydec/bipoly.hpp"
#include "polydec/blocks.hpp"

namespace polydec {

// Field spec: "p", "p^k" or "p^k/modulus", modulus a polynomial in z,
// e.g. "3^2/z^2+z+2".
Field parse_field(const std::string& spec);

// Polynomial grammar: terms like "c*x^e", "x^e", "c" joined by + and -.
// Extension-field coefficients are polynomials in z, parenthesized when
// composite: "(z+1)*x^2 + z". parse_poly rejects any use of y.
UniPoly parse_poly(const std::string& text, Field field);
BiPoly parse_bipoly(const std::string& text, Field field);

// permutation in cycle notation on 1-based points, e.g. "(1 3 5)(2 4 6)";
// n = 0 infers the largest point mentioned
std::vector<int> parse_cycles(const std::string& text, int n = 0);

std::string format_block_1based(const Block& b);

}  // namespace polydec
