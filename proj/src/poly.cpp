#include "polydec/poly.hpp"

#include <cassert>
#include <sstream>
#include <tuple>

#include "polydec/rng.hpp"

namespace polydec {

UniPoly::UniPoly(Field f, std::vector<FieldElement> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) {
  return UniPoly(c.field(), {c});
}

UniPoly UniPoly::x(Field f) { return UniPoly(f, {f->zero(), f->one()}); }

UniPoly UniPoly::monomial(Field f, int deg, const FieldElement& c) {
  std::vector<FieldElement> v(deg + 1, f->zero());
  v[deg] = c;
  return UniPoly(f, std::move(v));
}

UniPoly UniPoly::from_ints(Field f, const std::vector<int64_t>& coeffs) {
  std::vector<FieldElement> v;
  v.reserve(coeffs.size());
  for (int64_t c : coeffs) v.push_back(f->from_int(c));
  return UniPoly(f, std::move(v));
}

int UniPoly::degree() const {
  assert(!coeffs_.empty() && "degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

const FieldElement& UniPoly::lc() const {
  assert(!coeffs_.empty());
  return coeffs_.back();
}

FieldElement UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
  return coeffs_[i];
}

FieldElement UniPoly::operator()(const FieldElement& v) const {
  FieldElement acc = field_->zero();
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

bool UniPoly::is_normal() const {
  return !is_constant() && is_monic() && coeffs_[0].is_zero();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  assert(field_ == o.field_);
  std::vector<FieldElement> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = r[i] + o.coeffs_[i];
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  assert(field_ == o.field_);
  std::vector<FieldElement> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = r[i] - o.coeffs_[i];
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<FieldElement> r = coeffs_;
  for (auto& c : r) c = -c;
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  assert(field_ == o.field_);
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  std::vector<FieldElement> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] = r[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const FieldElement& c) const {
  if (c.is_zero()) return UniPoly(field_);
  std::vector<FieldElement> r = coeffs_;
  for (auto& x : r) x = x * c;
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::monic() const {
  assert(!is_zero());
  if (lc().is_one()) return *this;
  return *this * lc().inv();
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(field_);
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    r.push_back(coeffs_[i] * field_->from_int(static_cast<int64_t>(i)));
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::pow(uint32_t e) const {
  UniPoly result = UniPoly::constant(field_->one());
  UniPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

UniPoly UniPoly::shift_var(const FieldElement& w) const {
  // Horner: f(x + w)
  UniPoly xw(field_, {w, field_->one()});
  UniPoly acc = UniPoly::zero(field_);
  for (size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * xw + UniPoly::constant(coeffs_[i]);
  return acc;
}

bool UniPoly::operator<(const UniPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

UniPoly UniPoly::map_into(Field target) const {
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.push_back(embed(c, target));
  return UniPoly(target, std::move(r));
}

std::optional<UniPoly> UniPoly::pull_into(Field source) const {
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    auto b = pull_back(c, source);
    if (!b) return std::nullopt;
    r.push_back(*b);
  }
  return UniPoly(source, std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool ext = field_->k() > 1;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    bool needs_coeff = !(c.is_one() && i > 0);
    if (needs_coeff) {
      if (ext && cs.find('+') != std::string::npos) os << "(" << cs << ")";
      else os << cs;
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& d) {
  require(!d.is_zero(), Errc::DivisionByZero, "division by the zero polynomial");
  Field fd = f.field();
  if (f.is_zero() || f.degree() < d.degree())
    return {UniPoly::zero(fd), f};
  const bool monic = d.lc().is_one();
  FieldElement lcinv = monic ? d.lc() : d.lc().inv();
  std::vector<FieldElement> rem = f.coeffs();
  int dd = d.degree();
  std::vector<FieldElement> q(f.degree() - dd + 1, fd->zero());
  for (int i = f.degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    FieldElement c = monic ? rem[i] : rem[i] * lcinv;
    rem[i] = fd->zero();
    for (int j = 0; j < dd; ++j) {
      if (d.coeffs()[j].is_zero()) continue;
      rem[i - dd + j] = rem[i - dd + j] - c * d.coeffs()[j];
    }
    q[i - dd] = std::move(c);
  }
  return {UniPoly(fd, std::move(q)), UniPoly(fd, std::move(rem))};
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  require(!(f.is_zero() && g.is_zero()), Errc::DivisionByZero, "gcd(0, 0)");
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<UniPoly, UniPoly, UniPoly> ext_gcd(const UniPoly& f, const UniPoly& g) {
  Field fd = f.field();
  UniPoly r0 = f, r1 = g;
  UniPoly s0 = UniPoly::constant(fd->one()), s1 = UniPoly::zero(fd);
  UniPoly t0 = UniPoly::zero(fd), t1 = UniPoly::constant(fd->one());
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.is_zero() && !r0.lc().is_one()) {
    FieldElement inv = r0.lc().inv();
    r0 = r0 * inv;
    s0 = s0 * inv;
    t0 = t0 * inv;
  }
  return {r0, s0, t0};
}

FieldElement resultant(const UniPoly& f, const UniPoly& g) {
  require(!f.is_zero() && !g.is_zero(), Errc::DivisionByZero, "resultant of zero");
  Field fd = f.field();
  // Convention fixed by res(x - u, x - v) = v - u, i.e.
  // res(f, g) = lc(g)^deg(f) * prod f(beta) over the roots beta of g.
  // Euclid with leading-coefficient tracking on the swapped pair:
  // res*(A, B) = (-1)^(dA dB) lc(B)^(dA - dr) res*(B, r) with r = A rem B.
  UniPoly a = g, b = f;
  FieldElement acc = fd->one();
  bool negate = false;
  while (true) {
    if (a.is_constant()) {
      FieldElement r = acc * a.lc().pow(b.is_constant() ? 0 : b.degree());
      return negate ? -r : r;
    }
    if (b.is_constant()) {
      FieldElement r = acc * b.lc().pow(a.degree());
      return negate ? -r : r;
    }
    int da = a.degree(), db = b.degree();
    if (da < db) {
      if ((da & 1) && (db & 1)) negate = !negate;
      std::swap(a, b);
      continue;
    }
    UniPoly r = divrem(a, b).second;
    if (r.is_zero()) return fd->zero();
    acc = acc * b.lc().pow(static_cast<uint64_t>(da - r.degree()));
    if ((da & 1) && (db & 1)) negate = !negate;
    a = std::move(b);
    b = std::move(r);
  }
}

UniPoly compose(const UniPoly& g, const UniPoly& h) {
  Field fd = g.field();
  UniPoly acc = UniPoly::zero(fd);
  for (size_t i = g.coeffs().size(); i-- > 0;)
    acc = acc * h + UniPoly::constant(g.coeffs()[i]);
  return acc;
}

LinearPoly::LinearPoly(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
  assert(!a_.is_zero());
}

LinearPoly LinearPoly::compose(const LinearPoly& o) const {
  // this(o(x)) = a*(oa x + ob) + b
  return LinearPoly(a_ * o.a_, a_ * o.b_ + b_);
}

LinearPoly LinearPoly::inverse() const {
  FieldElement ai = a_.inv();
  return LinearPoly(ai, -(ai * b_));
}

UniPoly LinearPoly::to_poly() const { return UniPoly(field(), {b_, a_}); }

std::pair<LinearPoly, UniPoly> normalize(const UniPoly& f) {
  require(!f.is_constant(), Errc::ConstantInput, "normalize needs a non-constant polynomial");
  FieldElement a = f.lc(), b = f.coeff(0);
  FieldElement ai = a.inv();
  LinearPoly ell(ai, -(ai * b));
  UniPoly fn = (f - UniPoly::constant(b)) * ai;
  return {ell, fn};
}

UniPoly conjugate(const UniPoly& f, const FieldElement& w) {
  require(f.is_normal(), Errc::NotNormal, "conjugate needs a normal polynomial");
  UniPoly shifted = f.shift_var(w);  // f(x + w)
  return shifted - UniPoly::constant(shifted.coeff(0));
}

std::optional<UniPoly> taylor_left_component(const UniPoly& f, const UniPoly& h) {
  assert(!h.is_constant());
  Field fd = f.field();
  std::vector<FieldElement> digits;
  UniPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divrem(rest, h);
    if (!r.is_constant()) return std::nullopt;
    digits.push_back(r.is_zero() ? fd->zero() : r.coeff(0));
    rest = std::move(q);
  }
  return UniPoly(fd, std::move(digits));
}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), Errc::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(num_.field()->one());
    return;
  }
  UniPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divrem(num_, g).first;
    den_ = divrem(den_, g).first;
  }
  if (!den_.lc().is_one()) {
    FieldElement inv = den_.lc().inv();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFun RatFun::of(UniPoly p) {
  Field f = p.field();
  return RatFun(std::move(p), UniPoly::constant(f->one()));
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  require(!o.num_.is_zero(), Errc::DivisionByZero, "division by zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inv() const {
  require(!num_.is_zero(), Errc::DivisionByZero, "inverse of zero rational function");
  return RatFun(den_, num_);
}

UniPoly random_poly(Field f, int deg, Rng& rng) {
  std::vector<FieldElement> c;
  c.reserve(deg + 1);
  for (int i = 0; i < deg; ++i) c.push_back(f->random_element(rng));
  FieldElement top = f->random_element(rng);
  while (top.is_zero()) top = f->random_element(rng);
  c.push_back(top);
  return UniPoly(f, std::move(c));
}

UniPoly random_monic(Field f, int deg, Rng& rng) {
  std::vector<FieldElement> c;
  c.reserve(deg + 1);
  for (int i = 0; i < deg; ++i) c.push_back(f->random_element(rng));
  c.push_back(f->one());
  return UniPoly(f, std::move(c));
}

UniPoly random_normal(Field f, int deg, Rng& rng) {
  std::vector<FieldElement> c;
  c.reserve(deg + 1);
  c.push_back(f->zero());
  for (int i = 1; i < deg; ++i) c.push_back(f->random_element(rng));
  c.push_back(f->one());
  return UniPoly(f, std::move(c));
}

UniPoly normal_poly_at(Field f, int d, uint64_t index) {
  std::vector<FieldElement> c(d + 1, f->zero());
  c[d] = f->one();
  uint64_t q = f->order();
  for (int i = 1; i < d; ++i) {
    c[i] = f->element_at(index % q);
    index /= q;
  }
  return UniPoly(f, std::move(c));
}

}  // namespace polydec
