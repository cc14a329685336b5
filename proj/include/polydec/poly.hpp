#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydec/ff.hpp"

namespace polydec {

class Rng;

// Dense univariate polynomial; coeffs[i] is the coefficient of x^i and the
// top entry is nonzero. The zero polynomial is the empty coefficient vector;
// degree() asserts on it, use is_zero() first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field f) : field_(f) {}
  UniPoly(Field f, std::vector<FieldElement> coeffs);

  static UniPoly zero(Field f) { return UniPoly(f); }
  static UniPoly constant(const FieldElement& c);
  static UniPoly x(Field f);
  static UniPoly monomial(Field f, int deg, const FieldElement& c);
  static UniPoly from_ints(Field f, const std::vector<int64_t>& coeffs);

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;  // asserts nonzero
  int deg_or(int if_zero) const { return coeffs_.empty() ? if_zero : degree(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  const FieldElement& lc() const;  // leading coefficient, asserts nonzero
  FieldElement coeff(int i) const;  // 0 beyond the degree
  FieldElement operator()(const FieldElement& v) const;  // evaluation

  bool is_monic() const { return !is_zero() && lc().is_one(); }
  bool is_normal() const;  // monic with root at 0

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const FieldElement& c) const;
  UniPoly monic() const;  // divide by lc
  UniPoly derivative() const;
  UniPoly pow(uint32_t e) const;
  UniPoly shift_var(const FieldElement& w) const;  // f(x + w)

  bool operator==(const UniPoly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
  bool operator<(const UniPoly& o) const;  // degree, then coefficients from the top

  // map coefficients into another field (or apply any element map)
  UniPoly map_into(Field target) const;
  std::optional<UniPoly> pull_into(Field source) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  Field field_ = nullptr;
  std::vector<FieldElement> coeffs_;
};

std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& d);
UniPoly gcd(const UniPoly& f, const UniPoly& g);
// g = s*f + t*g0; returns (g, s, t)
std::tuple<UniPoly, UniPoly, UniPoly> ext_gcd(const UniPoly& f, const UniPoly& g);
FieldElement resultant(const UniPoly& f, const UniPoly& g);
UniPoly compose(const UniPoly& g, const UniPoly& h);  // g(h(x))

// a*x + b with a != 0
class LinearPoly {
 public:
  LinearPoly(FieldElement a, FieldElement b);

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  Field field() const { return a_.field(); }

  static LinearPoly identity(Field f) { return LinearPoly(f->one(), f->zero()); }

  FieldElement operator()(const FieldElement& v) const { return a_ * v + b_; }
  LinearPoly compose(const LinearPoly& o) const;  // this(o(x))
  LinearPoly inverse() const;                     // a^-1 x - a^-1 b
  UniPoly to_poly() const;

  bool operator==(const LinearPoly& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const LinearPoly& o) const { return !(*this == o); }
  bool operator<(const LinearPoly& o) const {
    return a_ < o.a_ || (a_ == o.a_ && b_ < o.b_);
  }

 private:
  FieldElement a_, b_;
};

// linear composition toolkit
std::pair<LinearPoly, UniPoly> normalize(const UniPoly& f);
UniPoly conjugate(const UniPoly& f, const FieldElement& w);
// h-adic digits of f; g with g(h) = f when all digits are constant
std::optional<UniPoly> taylor_left_component(const UniPoly& f, const UniPoly& h);

// num/den with den monic, gcd(num, den) = 1
class RatFun {
 public:
  explicit RatFun(Field f) : num_(UniPoly::zero(f)), den_(UniPoly::constant(f->one())) {}
  RatFun(UniPoly num, UniPoly den);
  static RatFun of(UniPoly p);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  Field field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun inv() const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  UniPoly num_, den_;
};

UniPoly random_poly(Field f, int deg, Rng& rng);         // exact degree
UniPoly random_monic(Field f, int deg, Rng& rng);
UniPoly random_normal(Field f, int deg, Rng& rng);        // monic, f(0) = 0
// the i-th normal polynomial of degree d (q^(d-1) of them)
UniPoly normal_poly_at(Field f, int d, uint64_t index);

}  // namespace polydec
