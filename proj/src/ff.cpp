#include "polydec/ff.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "polydec/bignum.hpp"
#include "polydec/rng.hpp"

namespace polydec {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// ---- dense polynomials over GF(p), coefficients as uint32 residues ----

using Zp = std::vector<uint32_t>;

void zp_trim(Zp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t zp_inv_scalar(uint32_t a, uint32_t p) {
  // extended Euclid on integers
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

Zp zp_mul(const Zp& a, const Zp& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Zp r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  zp_trim(r);
  return r;
}

// remainder of a by monic-or-not b
Zp zp_mod(Zp a, const Zp& b, uint32_t p) {
  assert(!b.empty());
  uint32_t lcinv = zp_inv_scalar(b.back(), p);
  while (a.size() >= b.size()) {
    uint64_t c = static_cast<uint64_t>(a.back()) * lcinv % p;
    if (c != 0) {
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t sub = c * b[j] % p;
        a[off + j] = static_cast<uint32_t>((a[off + j] + p - sub) % p);
      }
    }
    a.pop_back();
    zp_trim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

Zp zp_gcd(Zp a, Zp b, uint32_t p) {
  while (!b.empty()) {
    Zp r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    uint32_t inv = zp_inv_scalar(a.back(), p);
    for (auto& c : a) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % p);
  }
  return a;
}

Zp zp_powmod(Zp base, uint64_t e, const Zp& mod, uint32_t p) {
  Zp result{1};
  base = zp_mod(std::move(base), mod, p);
  while (e) {
    if (e & 1) result = zp_mod(zp_mul(result, base, p), mod, p);
    base = zp_mod(zp_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return result;
}

// z^(p^j) mod m via j successive p-th powers
Zp zp_frob_x(uint32_t j, const Zp& m, uint32_t p) {
  Zp cur{0, 1};  // z
  cur = zp_mod(std::move(cur), m, p);
  for (uint32_t i = 0; i < j; ++i) cur = zp_powmod(cur, p, m, p);
  return cur;
}

// Rabin irreducibility test for monic m of degree k over GF(p)
bool zp_irreducible(const Zp& m, uint32_t p) {
  assert(!m.empty() && m.back() == 1);
  uint32_t k = static_cast<uint32_t>(m.size() - 1);
  if (k == 0) return false;
  if (k == 1) return true;
  Zp xq = zp_frob_x(k, m, p);
  // z^(p^k) == z mod m
  Zp diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  zp_trim(diff);
  if (!diff.empty()) return false;
  for (uint32_t d = 2; d <= k; ++d) {
    if (k % d != 0 || !is_prime(d)) continue;
    Zp xe = zp_frob_x(k / d, m, p);
    if (xe.size() < 2) xe.resize(2, 0);
    xe[1] = (xe[1] + p - 1) % p;
    zp_trim(xe);
    if (zp_gcd(m, xe, p).size() != 1) return false;
  }
  return true;
}

// smallest monic irreducible of degree k, coefficient tuples compared from
// the z^(k-1) coefficient down
Zp canonical_modulus(uint32_t p, uint32_t k) {
  Zp m(k + 1, 0);
  m[k] = 1;
  // odometer over (m[k-1], ..., m[0]) with m[0] fastest would be the
  // wrong order; iterate the high coefficients as the slow digits.
  std::vector<uint32_t> digits(k, 0);  // digits[0] = coeff of z^(k-1)
  while (true) {
    for (uint32_t i = 0; i < k; ++i) m[k - 1 - i] = digits[i];
    if (zp_irreducible(m, p)) return m;
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  fail(Errc::ReducibleModulus, "no irreducible of requested degree (unreachable)");
}

// ---- field registry ----

struct FieldKey {
  uint32_t p, k;
  std::vector<uint32_t> mod;
  bool operator<(const FieldKey& o) const {
    if (p != o.p) return p < o.p;
    if (k != o.k) return k < o.k;
    return mod < o.mod;
  }
};

std::mutex g_registry_mutex;
std::map<FieldKey, std::unique_ptr<FiniteField>>& registry() {
  static std::map<FieldKey, std::unique_ptr<FiniteField>> r;
  return r;
}

}  // namespace

FiniteField::FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {}

Field FiniteField::get(uint32_t p, uint32_t k, const std::vector<uint32_t>* modulus) {
  require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  require(k >= 1, Errc::DegreeMismatch, "extension degree must be >= 1");
  require(p < (1u << 30), Errc::NotPrime, "characteristic too large");

  Zp mod;
  if (k > 1) {
    if (modulus) {
      mod = *modulus;
      zp_trim(mod);
      require(mod.size() == k + 1, Errc::DegreeMismatch,
              "modulus degree does not match extension degree");
      require(mod.back() % p == 1, Errc::DegreeMismatch, "modulus must be monic");
      for (auto& c : mod) c %= p;
      require(zp_irreducible(mod, p), Errc::ReducibleModulus,
              "modulus is reducible over GF(" + std::to_string(p) + ")");
    } else {
      // the canonical modulus search is costly for large degrees; memoize it
      static std::mutex canon_mutex;
      static std::map<std::pair<uint32_t, uint32_t>, Zp> canon_cache;
      std::lock_guard<std::mutex> lock(canon_mutex);
      auto it = canon_cache.find({p, k});
      if (it == canon_cache.end())
        it = canon_cache.emplace(std::make_pair(p, k), canonical_modulus(p, k)).first;
      mod = it->second;
    }
  } else if (modulus) {
    Zp m = *modulus;
    zp_trim(m);
    require(m.size() <= 2, Errc::DegreeMismatch, "modulus for a prime field must be linear");
  }

  FieldKey key{p, k, mod};
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto& slot = registry()[key];
  if (!slot) slot.reset(new FiniteField(p, k, mod));
  return slot.get();
}

bool FiniteField::order_fits_u64() const {
  uint64_t q = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    if (q > UINT64_MAX / p_) return false;
    q *= p_;
  }
  return true;
}

uint64_t FiniteField::order() const {
  assert(order_fits_u64());
  uint64_t q = 1;
  for (uint32_t i = 0; i < k_; ++i) q *= p_;
  return q;
}

FieldElement FiniteField::zero() const {
  FieldElement r(this, k_);
  std::fill_n(r.mdata(), k_, 0u);
  return r;
}

FieldElement FiniteField::one() const {
  FieldElement r = zero();
  r.mdata()[0] = 1;
  return r;
}

FieldElement FiniteField::from_int(int64_t v) const {
  int64_t m = v % static_cast<int64_t>(p_);
  if (m < 0) m += p_;
  FieldElement r = zero();
  r.mdata()[0] = static_cast<uint32_t>(m);
  return r;
}

FieldElement FiniteField::from_coords(std::vector<uint32_t> c) const {
  require(c.size() <= k_, Errc::DegreeMismatch, "too many coordinates for this field");
  c.resize(k_, 0);
  for (auto& x : c) x %= p_;
  return FieldElement(this, std::move(c));
}

FieldElement FiniteField::gen() const {
  assert(k_ > 1);
  FieldElement r = zero();
  r.mdata()[1] = 1;
  return r;
}

FieldElement FiniteField::element_at(uint64_t index) const {
  FieldElement r(this, k_);
  uint32_t* c = r.mdata();
  for (uint32_t i = k_; i-- > 0;) {
    c[i] = static_cast<uint32_t>(index % p_);
    index /= p_;
  }
  // c[0] is the most significant digit, so increasing index is
  // coordinate-lexicographic order
  return r;
}

uint64_t FiniteField::index_of(const FieldElement& a) const {
  assert(a.field() == this);
  uint64_t idx = 0;
  for (uint32_t i = 0; i < k_; ++i) idx = idx * p_ + a.coords()[i];
  return idx;
}

FieldElement FiniteField::random_element(Rng& rng) const {
  FieldElement r(this, k_);
  uint32_t* c = r.mdata();
  for (uint32_t i = 0; i < k_; ++i) c[i] = static_cast<uint32_t>(rng.below(p_));
  return r;
}

std::string FiniteField::spec_string() const {
  if (k_ == 1) return std::to_string(p_);
  std::ostringstream os;
  os << p_ << "^" << k_ << "/";
  bool first = true;
  for (uint32_t i = k_ + 1; i-- > 0;) {
    uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---- FieldElement ----

FieldElement::FieldElement(Field f, std::vector<uint32_t> coords)
    : field_(f), k_(f->k()) {
  assert(coords.size() == f->k());
  if (k_ <= kInline)
    std::copy(coords.begin(), coords.end(), small_.begin());
  else
    big_ = std::move(coords);
}

bool FieldElement::is_zero() const {
  const uint32_t* c = cdata();
  for (uint32_t i = 0; i < k_; ++i)
    if (c[i] != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  const uint32_t* c = cdata();
  if (c[0] != 1) return false;
  for (uint32_t i = 1; i < k_; ++i)
    if (c[i] != 0) return false;
  return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (field_ != o.field_) return false;
  const uint32_t* a = cdata();
  const uint32_t* b = o.cdata();
  for (uint32_t i = 0; i < k_; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  assert(field_ == o.field_);
  const uint32_t p = field_->p();
  FieldElement r(field_, k_);
  const uint32_t* a = cdata();
  const uint32_t* b = o.cdata();
  uint32_t* out = r.mdata();
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t s = a[i] + b[i];
    out[i] = s >= p ? s - p : s;
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  assert(field_ == o.field_);
  const uint32_t p = field_->p();
  FieldElement r(field_, k_);
  const uint32_t* a = cdata();
  const uint32_t* b = o.cdata();
  uint32_t* out = r.mdata();
  for (uint32_t i = 0; i < k_; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  return r;
}

FieldElement FieldElement::operator-() const {
  const uint32_t p = field_->p();
  FieldElement r(field_, k_);
  const uint32_t* a = cdata();
  uint32_t* out = r.mdata();
  for (uint32_t i = 0; i < k_; ++i) out[i] = a[i] == 0 ? 0 : p - a[i];
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  assert(field_ == o.field_);
  const uint32_t p = field_->p();
  const uint32_t k = k_;
  FieldElement r(field_, k);
  const uint32_t* a = cdata();
  const uint32_t* b = o.cdata();
  uint32_t* out = r.mdata();
  if (k == 1) {
    out[0] = static_cast<uint32_t>(static_cast<uint64_t>(a[0]) * b[0] % p);
    return r;
  }
  // schoolbook product with lazy reduction: for small p the uint64
  // accumulators cannot overflow, so % happens once per slot
  const bool lazy = p < (1u << 15) && k < (1u << 15);
  uint64_t stack_buf[2 * kInline - 1];
  std::vector<uint64_t> heap_buf;
  uint64_t* prod;
  if (k <= kInline) {
    prod = stack_buf;
    std::fill_n(prod, 2 * k - 1, 0);
  } else {
    heap_buf.assign(2 * k - 1, 0);
    prod = heap_buf.data();
  }
  for (uint32_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    const uint64_t ai = a[i];
    uint64_t* row = prod + i;
    if (lazy) {
      for (uint32_t j = 0; j < k; ++j) row[j] += ai * b[j];
    } else {
      for (uint32_t j = 0; j < k; ++j) row[j] = (row[j] + ai * b[j]) % p;
    }
  }
  // fold down by the monic modulus, adding c (p - m[j]) keeps slots nonnegative
  const auto& m = field_->modulus_;
  for (uint32_t i = 2 * k - 2; i >= k; --i) {
    uint64_t c = prod[i] % p;
    if (c != 0) {
      uint64_t* row = prod + (i - k);
      if (lazy) {
        for (uint32_t j = 0; j < k; ++j) row[j] += c * (p - m[j]);
      } else {
        for (uint32_t j = 0; j < k; ++j) row[j] = (row[j] + c * (p - m[j])) % p;
      }
    }
    prod[i] = 0;
    if (i == k) break;
  }
  for (uint32_t i = 0; i < k; ++i) out[i] = static_cast<uint32_t>(prod[i] % p);
  return r;
}

FieldElement FieldElement::inv() const {
  require(!is_zero(), Errc::DivisionByZero, "inverse of zero");
  const uint32_t p = field_->p();
  if (k_ == 1) {
    FieldElement r(field_, 1);
    r.mdata()[0] = zp_inv_scalar(cdata()[0], p);
    return r;
  }
  // extended Euclid of (a, modulus) over GF(p)[z]
  Zp r0 = field_->modulus_, r1(cdata(), cdata() + k_);
  zp_trim(r1);
  Zp s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    Zp q;
    Zp rem = r0;
    uint32_t lcinv = zp_inv_scalar(r1.back(), p);
    if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      uint64_t c = static_cast<uint64_t>(rem.back()) * lcinv % p;
      size_t off = rem.size() - r1.size();
      q[off] = static_cast<uint32_t>(c);
      for (size_t j = 0; j < r1.size(); ++j) {
        uint64_t sub = c * r1[j] % p;
        rem[off + j] = static_cast<uint32_t>((rem[off + j] + p - sub) % p);
      }
      zp_trim(rem);
    }
    Zp s2 = s0;  // s2 = s0 - q*s1
    Zp qs = zp_mul(q, s1, p);
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
    zp_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant since modulus is irreducible)
  assert(r0.size() == 1);
  uint32_t ginv = zp_inv_scalar(r0[0], p);
  FieldElement out(field_, k_);
  std::fill_n(out.mdata(), k_, 0u);
  for (size_t i = 0; i < s0.size(); ++i)
    out.mdata()[i] = static_cast<uint32_t>(static_cast<uint64_t>(s0[i]) * ginv % p);
  return out;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::pow(uint64_t e) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::frobenius() const { return pow(field_->p()); }

FieldElement FieldElement::frobenius_power(uint32_t j) const {
  FieldElement r = *this;
  for (uint32_t i = 0; i < j % field_->k(); ++i) r = r.frobenius();
  return r;
}

bool FieldElement::operator<(const FieldElement& o) const {
  assert(field_ == o.field_);
  const uint32_t* a = cdata();
  const uint32_t* b = o.cdata();
  return std::lexicographical_compare(a, a + k_, b, b + k_);
}

std::string FieldElement::to_string() const {
  const uint32_t* c_ = cdata();
  if (field_->k() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (uint32_t i = field_->k(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---- embeddings ----

namespace {

// local polynomial layer over an arbitrary field, only what root finding
// inside embed() needs
using EPoly = std::vector<FieldElement>;

void ep_trim(EPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

EPoly ep_mul(const EPoly& a, const EPoly& b, Field f) {
  if (a.empty() || b.empty()) return {};
  EPoly r(a.size() + b.size() - 1, f->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  ep_trim(r);
  return r;
}

EPoly ep_mod(EPoly a, const EPoly& b, Field) {
  assert(!b.empty());
  FieldElement lcinv = b.back().inv();
  ep_trim(a);
  while (a.size() >= b.size()) {
    FieldElement c = a.back() * lcinv;
    size_t off = a.size() - b.size();
    for (size_t j = 0; j + 1 < b.size(); ++j) a[off + j] = a[off + j] - c * b[j];
    a.pop_back();
    ep_trim(a);
  }
  return a;
}

EPoly ep_gcd(EPoly a, EPoly b, Field f) {
  ep_trim(a);
  ep_trim(b);
  while (!b.empty()) {
    EPoly r = ep_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && !a.back().is_one()) {
    FieldElement inv = a.back().inv();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

EPoly ep_powmod_big(EPoly base, const BigUint& e, const EPoly& mod, Field f) {
  EPoly result{f->one()};
  base = ep_mod(std::move(base), mod, f);
  for (size_t i = 0; i < e.bit_length(); ++i) {
    if (e.bit(i)) result = ep_mod(ep_mul(result, base, f), mod, f);
    base = ep_mod(ep_mul(base, base, f), mod, f);
  }
  return result;
}

// one root of a squarefree polynomial that splits completely over f's field;
// keeps only the smaller branch of each split, so large moduli stay cheap
FieldElement ep_one_root(EPoly g, Field f, Rng& rng) {
  ep_trim(g);
  assert(g.size() >= 2);
  const uint32_t p = f->p();
  while (g.size() > 2) {
    EPoly d;
    if (p == 2) {
      EPoly t{f->random_element(rng), f->one()};
      EPoly acc = ep_mod(t, g, f);
      EPoly cur = acc;
      for (uint32_t i = 1; i < f->k(); ++i) {
        cur = ep_mod(ep_mul(cur, cur, f), g, f);
        if (acc.size() < cur.size()) acc.resize(cur.size(), f->zero());
        for (size_t j = 0; j < cur.size(); ++j) acc[j] = acc[j] + cur[j];
        ep_trim(acc);
      }
      d = ep_gcd(g, acc, f);
    } else {
      BigUint e = BigUint::prime_power(p, f->k());
      e.sub_small(1);
      e.shr1();
      EPoly t{f->random_element(rng), f->one()};
      EPoly pw = ep_powmod_big(t, e, g, f);
      if (pw.empty())
        pw = {f->from_int(-1)};
      else
        pw[0] = pw[0] - f->one();
      ep_trim(pw);
      d = ep_gcd(g, pw, f);
    }
    if (d.size() <= 1 || d.size() >= g.size()) continue;
    if (2 * d.size() <= g.size()) {
      g = std::move(d);
    } else {
      // take the cofactor, it is smaller
      EPoly rem = g;
      EPoly quot(g.size() - d.size() + 1, f->zero());
      FieldElement lcinv = d.back().inv();
      while (rem.size() >= d.size()) {
        FieldElement c = rem.back() * lcinv;
        size_t off = rem.size() - d.size();
        quot[off] = c;
        for (size_t j = 0; j < d.size(); ++j) rem[off + j] = rem[off + j] - c * d[j];
        ep_trim(rem);
      }
      g = std::move(quot);
      ep_trim(g);
    }
  }
  return -(g[0] / g[1]);
}

struct EmbeddingData {
  std::vector<FieldElement> basis_images;  // images of 1, z, z^2, ... in target
  // row-reduced solve data for pull_back: matrix is K x k over GF(p)
  std::vector<std::vector<uint32_t>> mat;  // augmented during solve
};

std::mutex g_embed_mutex;
std::map<std::pair<Field, Field>, EmbeddingData>& embed_cache() {
  static std::map<std::pair<Field, Field>, EmbeddingData> c;
  return c;
}

const EmbeddingData& embedding_for(Field src, Field tgt) {
  std::lock_guard<std::mutex> lock(g_embed_mutex);
  auto key = std::make_pair(src, tgt);
  auto it = embed_cache().find(key);
  if (it != embed_cache().end()) return it->second;

  EmbeddingData data;
  const uint32_t k = src->k();
  if (k == 1) {
    data.basis_images = {tgt->one()};
  } else {
    // roots of the source modulus in the target are the Frobenius orbit of
    // any one of them; pick the lexicographically smallest for determinism
    EPoly m;
    m.reserve(k + 1);
    for (uint32_t i = 0; i <= k; ++i) m.push_back(tgt->from_int(src->modulus()[i]));
    Rng rng(0x9d39247e33776d41ULL);  // fixed internal seed; result is canonical anyway
    FieldElement r0 = ep_one_root(m, tgt, rng);
    // the conjugate set is r0^(p^j) for j < k; take the smallest
    std::vector<FieldElement> roots;
    FieldElement cur = r0;
    for (uint32_t j = 0; j < k; ++j) {
      roots.push_back(cur);
      cur = cur.frobenius();
    }
    FieldElement r = *std::min_element(roots.begin(), roots.end());
    data.basis_images.push_back(tgt->one());
    for (uint32_t i = 1; i < k; ++i) data.basis_images.push_back(data.basis_images.back() * r);
  }
  // pull-back matrix: columns are coordinates of basis images
  const uint32_t bigk = tgt->k();
  data.mat.assign(bigk, std::vector<uint32_t>(k, 0));
  for (uint32_t j = 0; j < k; ++j)
    for (uint32_t i = 0; i < bigk; ++i) data.mat[i][j] = data.basis_images[j].coords()[i];
  return embed_cache().emplace(key, std::move(data)).first->second;
}

}  // namespace

FieldElement embed(const FieldElement& a, Field target) {
  Field src = a.field();
  if (src == target) return a;
  require(src->p() == target->p() && target->k() % src->k() == 0, Errc::NoEmbedding,
          "no embedding of " + src->spec_string() + " into " + target->spec_string());
  const EmbeddingData& e = embedding_for(src, target);
  FieldElement out = target->zero();
  for (uint32_t j = 0; j < src->k(); ++j) {
    uint32_t c = a.coords()[j];
    if (c == 0) continue;
    out = out + e.basis_images[j] * target->from_int(c);
  }
  return out;
}

std::optional<FieldElement> pull_back(const FieldElement& b, Field source) {
  Field tgt = b.field();
  if (tgt == source) return b;
  require(source->p() == tgt->p() && tgt->k() % source->k() == 0, Errc::NoEmbedding,
          "no embedding for pull_back");
  const EmbeddingData& e = embedding_for(source, tgt);
  // solve mat * x = coords(b) over GF(p) by fresh elimination (fields are tiny)
  const uint32_t p = tgt->p();
  const uint32_t rows = tgt->k(), cols = source->k();
  std::vector<std::vector<uint32_t>> m(rows, std::vector<uint32_t>(cols + 1, 0));
  for (uint32_t i = 0; i < rows; ++i) {
    for (uint32_t j = 0; j < cols; ++j) m[i][j] = e.mat[i][j];
    m[i][cols] = b.coords()[i];
  }
  uint32_t rank = 0;
  std::vector<int> pivot_col(rows, -1);
  for (uint32_t col = 0; col < cols && rank < rows; ++col) {
    uint32_t sel = rank;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    uint32_t inv = zp_inv_scalar(m[rank][col], p);
    for (auto& x : m[rank]) x = static_cast<uint32_t>(static_cast<uint64_t>(x) * inv % p);
    for (uint32_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      uint64_t f = m[i][col];
      for (uint32_t j = 0; j <= cols; ++j)
        m[i][j] = static_cast<uint32_t>((m[i][j] + p * f - f * m[rank][j] % p) % p);
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (uint32_t i = rank; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;  // not in the image
  std::vector<uint32_t> x(cols, 0);
  for (uint32_t i = 0; i < rank; ++i) x[pivot_col[i]] = m[i][cols];
  return source->from_coords(std::move(x));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoEmbedding: return "NoEmbedding";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::NotNormal: return "NotNormal";
    case Errc::DerivativeZero: return "DerivativeZero";
    case Errc::NotMonic: return "NotMonic";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::CoefficientOutOfField: return "CoefficientOutOfField";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::AlphaLeak: return "AlphaLeak";
    case Errc::LeftComponentMissing: return "LeftComponentMissing";
    case Errc::NotClosed: return "NotClosed";
    case Errc::SeedsNotCoprime: return "SeedsNotCoprime";
    case Errc::SeedProductMismatch: return "SeedProductMismatch";
    case Errc::NoCaseMatches: return "NoCaseMatches";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::CompositionMismatch: return "CompositionMismatch";
  }
  return "UnknownError";
}

}  // namespace polydec
