#pragma once

#include <string>
#include <vector>

#include "polydec/poly.hpp"

namespace polydec {

// Element of F[y][x]: rows[i] is the y-polynomial coefficient of x^i, the top
// row is nonzero. y stands for the root alpha of f - t throughout; t itself is
// never materialized, it is always f(y).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field f) : field_(f) {}
  BiPoly(Field f, std::vector<UniPoly> rows);

  static BiPoly zero(Field f) { return BiPoly(f); }
  static BiPoly from_x(const UniPoly& f);  // f(x)
  static BiPoly from_y(const UniPoly& f);  // f(y)
  static BiPoly phi(const UniPoly& f);     // f(x) - f(y)

  Field field() const { return field_; }
  bool is_zero() const { return rows_.empty(); }
  int deg_x() const;  // asserts nonzero
  int deg_y() const;  // asserts nonzero
  bool is_monic_x() const;

  const std::vector<UniPoly>& rows() const { return rows_; }
  UniPoly coeff_x(int i) const;  // zero polynomial beyond deg_x

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly scale_y(const UniPoly& c) const;  // multiply by a polynomial in y
  BiPoly mul_trunc_y(const BiPoly& o, int prec) const;  // product mod y^prec
  BiPoly trunc_y(int prec) const;

  UniPoly eval_y(const FieldElement& c) const;   // substitute y := c
  UniPoly eval_x(const FieldElement& c) const;   // substitute x := c
  UniPoly subst_x_poly(const UniPoly& u) const;  // x := u(y), result in y
  BiPoly shift_y(const FieldElement& w) const;   // y := y + w
  BiPoly swap_xy() const;

  UniPoly content_y() const;  // monic gcd of the rows
  BiPoly map_into(Field target) const;
  std::optional<BiPoly> pull_into(Field source) const;
  // apply a -> a^(p^j) to every coefficient (Galois action on constants)
  BiPoly frobenius_coeffs(uint32_t j) const;

  bool operator==(const BiPoly& o) const { return field_ == o.field_ && rows_ == o.rows_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }
  bool operator<(const BiPoly& o) const;

  std::string to_string() const;

 private:
  void trim();
  Field field_ = nullptr;
  std::vector<UniPoly> rows_;
};

// division in F[y][x] by a divisor monic in x
std::pair<BiPoly, BiPoly> divrem_x(const BiPoly& f, const BiPoly& d);

}  // namespace polydec
