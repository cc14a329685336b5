#include "polydec/factor.hpp"

#include <algorithm>
#include <cassert>

#include "polydec/bignum.hpp"

namespace polydec {

namespace {

UniPoly poly_mod(const UniPoly& a, const UniPoly& m) { return divrem(a, m).second; }

UniPoly poly_powmod_big(UniPoly base, const BigUint& e, const UniPoly& mod) {
  Field f = base.field();
  UniPoly result = UniPoly::constant(f->one());
  base = poly_mod(base, mod);
  for (size_t i = 0; i < e.bit_length(); ++i) {
    if (e.bit(i)) result = poly_mod(result * base, mod);
    base = poly_mod(base * base, mod);
  }
  return result;
}

// base^(p^j) mod m, via j successive p-th powers (q itself may not fit u64)
UniPoly frobenius_powmod(UniPoly base, uint32_t j, const UniPoly& mod) {
  for (uint32_t i = 0; i < j; ++i) base = poly_powmod(base, base.field()->p(), mod);
  return base;
}

UniPoly pth_root(const UniPoly& f) {
  Field fd = f.field();
  const uint32_t p = fd->p();
  std::vector<FieldElement> c;
  for (size_t i = 0; i < f.coeffs().size(); i += p)
    c.push_back(f.coeffs()[i].frobenius_power(fd->k() - 1));
  return UniPoly(fd, std::move(c));
}

// equal-degree splitting: g is a product of m >= 2 distinct irreducibles of
// degree d; appends them to out
void edf(const UniPoly& g, int d, Rng& rng, std::vector<UniPoly>& out) {
  Field f = g.field();
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const uint32_t p = f->p();
  for (int attempt = 0;; ++attempt) {
    assert(attempt < 512);
    UniPoly r = random_poly(f, static_cast<int>(rng.below(g.degree() - 1)) + 1, rng);
    UniPoly split;
    if (p == 2) {
      // trace map over GF(2^(k d))
      UniPoly acc = poly_mod(r, g);
      UniPoly cur = acc;
      uint32_t rounds = f->k() * static_cast<uint32_t>(d);
      for (uint32_t i = 1; i < rounds; ++i) {
        cur = poly_mod(cur * cur, g);
        acc = acc + cur;
      }
      split = gcd(g, acc);
    } else {
      BigUint e = BigUint::prime_power(p, f->k() * static_cast<uint32_t>(d));
      e.sub_small(1);
      e.shr1();
      UniPoly t = poly_powmod_big(r, e, g);
      t = t - UniPoly::constant(f->one());
      split = gcd(g, t);
    }
    if (!split.is_constant() && split.degree() < g.degree()) {
      edf(split, d, rng, out);
      edf(divrem(g, split).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

UniPoly poly_powmod(const UniPoly& base, uint64_t e, const UniPoly& mod) {
  Field f = base.field();
  UniPoly result = UniPoly::constant(f->one());
  UniPoly b = poly_mod(base, mod);
  while (e) {
    if (e & 1) result = poly_mod(result * b, mod);
    b = poly_mod(b * b, mod);
    e >>= 1;
  }
  return result;
}

UniPoly squarefree_part(const UniPoly& f) {
  require(!f.is_zero(), Errc::DivisionByZero, "squarefree part of zero");
  UniPoly g = f.monic();
  if (g.is_constant()) return g;
  UniPoly d = g.derivative();
  if (d.is_zero()) return squarefree_part(pth_root(g));
  UniPoly u = gcd(g, d);
  UniPoly v = divrem(g, u).first;  // distinct factors with multiplicity not divisible by p
  // strip v-parts from u; what is left is a p-th power
  UniPoly w = u;
  while (true) {
    UniPoly h = gcd(w, v);
    if (h.is_constant()) break;
    w = divrem(w, h).first;
  }
  if (w.is_constant()) return v;
  return v * squarefree_part(pth_root(w));
}

std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& f, Rng& rng) {
  require(!f.is_constant(), Errc::ConstantInput, "factor_univariate needs deg >= 1");
  Field fd = f.field();
  UniPoly sf = squarefree_part(f);

  // distinct-degree on the squarefree part
  std::vector<UniPoly> irreducibles;
  UniPoly rest = sf;
  UniPoly w = poly_mod(UniPoly::x(fd), rest);
  for (int d = 1; !rest.is_constant() && 2 * d <= rest.degree(); ++d) {
    w = frobenius_powmod(w, fd->k(), rest);  // w = x^(q^d) mod rest
    UniPoly g = gcd(w - UniPoly::x(fd), rest);
    if (!g.is_constant()) {
      if (g.degree() == d)
        irreducibles.push_back(g.monic());
      else
        edf(g, d, rng, irreducibles);
      rest = divrem(rest, g).first;
      w = poly_mod(w, rest);
    }
  }
  if (!rest.is_constant()) irreducibles.push_back(rest.monic());

  std::sort(irreducibles.begin(), irreducibles.end());
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly remaining = f.monic();
  for (const auto& irr : irreducibles) {
    int mult = 0;
    while (true) {
      auto [q, r] = divrem(remaining, irr);
      if (!r.is_zero()) break;
      remaining = q;
      ++mult;
    }
    assert(mult >= 1);
    out.emplace_back(irr, mult);
  }
  assert(remaining.is_constant());
  return out;
}

std::pair<FieldElement, Field> good_point(const UniPoly& f) {
  Field fd = f.field();
  UniPoly d = f.derivative();
  require(!d.is_zero(), Errc::DerivativeZero, "good_point needs f' != 0");
  const uint64_t n = static_cast<uint64_t>(f.degree());
  for (uint32_t e = 1;; ++e) {
    Field ext = e == 1 ? fd : FiniteField::get(fd->p(), fd->k() * e);
    UniPoly fe = e == 1 ? f : f.map_into(ext);
    UniPoly de = fe.derivative();
    uint64_t q = ext->order();
    for (uint64_t i = 0; i < q; ++i) {
      FieldElement c = ext->element_at(i);
      UniPoly shifted = fe - UniPoly::constant(fe(c));
      if (gcd(shifted, de).is_constant()) return {c, ext};
    }
    // c is bad only if f(c) is one of the < n critical values, each with at
    // most n preimages, so any field with more than n(n-1) elements has a
    // good point
    require(q <= n * (n - 1), Errc::SeedProductMismatch,
            "no good point below the counting bound");
  }
}

namespace {

// one quadratic Hensel step: f ≡ g h, s g + t h ≡ 1 (mod y^cur), all monic in
// x, lifts the congruences to y^next
struct HenselPair {
  BiPoly g, h, s, t;
};

void hensel_step(const BiPoly& f, HenselPair& p, int next) {
  BiPoly e = (f - p.g.mul_trunc_y(p.h, next)).trunc_y(next);
  auto [q, r] = divrem_x(p.s.mul_trunc_y(e, next), p.h);
  BiPoly gstar = (p.g + p.t.mul_trunc_y(e, next) + q.mul_trunc_y(p.g, next)).trunc_y(next);
  BiPoly hstar = (p.h + r).trunc_y(next);
  BiPoly b = (p.s.mul_trunc_y(gstar, next) + p.t.mul_trunc_y(hstar, next) -
              BiPoly::from_x(UniPoly::constant(f.field()->one())))
                 .trunc_y(next);
  auto [c, dd] = divrem_x(p.s.mul_trunc_y(b, next), hstar);
  BiPoly sstar = (p.s - dd).trunc_y(next);
  BiPoly tstar =
      (p.t - p.t.mul_trunc_y(b, next) - c.mul_trunc_y(gstar, next)).trunc_y(next);
  p = {gstar, hstar, sstar, tstar};
}

// factors of target congruent to products of seed ranges, mod y^prec; target
// is monic in x and everything lives in shifted coordinates (good point at 0)
void lift_tree(const BiPoly& target, const std::vector<UniPoly>& seeds, size_t lo,
               size_t hi, int prec, std::vector<BiPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(target.trunc_y(prec));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  Field f = target.field();
  UniPoly g0 = UniPoly::constant(f->one());
  for (size_t i = lo; i < mid; ++i) g0 = g0 * seeds[i];
  UniPoly h0 = UniPoly::constant(f->one());
  for (size_t i = mid; i < hi; ++i) h0 = h0 * seeds[i];
  auto [gg, s0, t0] = ext_gcd(g0, h0);
  require(gg.is_constant() && !gg.is_zero(), Errc::SeedsNotCoprime,
          "hensel seeds are not pairwise coprime");
  HenselPair p{BiPoly::from_x(g0), BiPoly::from_x(h0), BiPoly::from_x(s0),
               BiPoly::from_x(t0)};
  int cur = 1;
  while (cur < prec) {
    int next = std::min(2 * cur, prec);
    hensel_step(target, p, next);
    cur = next;
  }
  lift_tree(p.g, seeds, lo, mid, prec, out);
  lift_tree(p.h, seeds, mid, hi, prec, out);
}

}  // namespace

std::vector<BiPoly> hensel_lift(const BiPoly& Phi, const FieldElement& c,
                                const std::vector<UniPoly>& seeds, int precision) {
  require(precision >= 1, Errc::DegreeTooSmall, "precision must be >= 1");
  Field f = Phi.field();
  UniPoly at_c = Phi.eval_y(c);
  UniPoly prod = UniPoly::constant(f->one());
  for (const auto& s : seeds) prod = prod * s;
  require(prod == at_c, Errc::SeedProductMismatch,
          "seed product does not equal Phi(x, c)");
  for (size_t i = 0; i < seeds.size(); ++i)
    for (size_t j = i + 1; j < seeds.size(); ++j)
      require(gcd(seeds[i], seeds[j]).is_constant(), Errc::SeedsNotCoprime,
              "hensel seeds are not pairwise coprime");

  BiPoly shifted = Phi.shift_y(c).trunc_y(precision);  // good point moved to y = 0
  std::vector<BiPoly> lifted;
  lift_tree(shifted, seeds, 0, seeds.size(), precision, lifted);
  for (auto& fac : lifted) fac = fac.shift_y(-c);
  return lifted;
}

namespace {

// recombination state over one coefficient field
std::vector<BiPoly> recombine(const BiPoly& phi_shifted, std::vector<BiPoly> lifted,
                              int prec) {
  Field f = phi_shifted.field();
  std::vector<BiPoly> factors;
  BiPoly current = phi_shifted;
  std::vector<size_t> remaining(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) remaining[i] = i;

  // a couple of cheap univariate divisibility probes before full division
  std::vector<FieldElement> probes;
  {
    uint64_t q = f->order_fits_u64() ? f->order() : 0;
    for (uint64_t i = 1; i < q && probes.size() < 2; ++i) probes.push_back(f->element_at(i));
  }

  for (size_t size = 1; !remaining.empty() && size <= remaining.size();) {
    if (size == remaining.size()) {
      // the rest is one irreducible factor
      factors.push_back(current);
      remaining.clear();
      break;
    }
    // iterate over subsets of `remaining` of the given cardinality
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      BiPoly cand = lifted[remaining[idx[0]]];
      for (size_t i = 1; i < size; ++i)
        cand = cand.mul_trunc_y(lifted[remaining[idx[i]]], prec);
      bool ok = true;
      for (const auto& pt : probes) {
        UniPoly cu = cand.eval_y(pt), fu = current.eval_y(pt);
        if (cu.is_constant() || !divrem(fu, cu).second.is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        auto [q, r] = divrem_x(current, cand);
        if (r.is_zero()) {
          factors.push_back(cand);
          current = q;
          std::vector<size_t> keep;
          for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
            if (j < size && idx[j] == i) {
              ++j;
              continue;
            }
            keep.push_back(remaining[i]);
          }
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      size_t k = size;
      while (k > 0 && idx[k - 1] == remaining.size() - size + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++size;
  }
  return factors;
}

}  // namespace

PhiFactorization factor_phi(const UniPoly& f, Rng& rng) {
  require(!f.is_zero() && f.is_monic(), Errc::NotMonic, "factor_phi needs a monic input");
  require(f.degree() >= 2, Errc::DegreeTooSmall, "factor_phi needs deg >= 2");
  require(!f.derivative().is_zero(), Errc::DerivativeZero, "factor_phi needs f' != 0");

  Field base = f.field();
  auto [c, ext] = good_point(f);
  const bool extended = ext != base;
  UniPoly fe = extended ? f.map_into(ext) : f;
  const int n = f.degree();
  const int prec = n + 1;

  BiPoly phi = BiPoly::phi(fe);
  UniPoly specialized = phi.eval_y(c);
  auto seed_factors = factor_univariate(specialized, rng);
  std::vector<UniPoly> seeds;
  for (auto& [irr, mult] : seed_factors) {
    require(mult == 1, Errc::SeedProductMismatch, "good point gave a non-squarefree value");
    seeds.push_back(irr);
  }

  BiPoly shifted = phi.shift_y(c);
  std::vector<BiPoly> lifted;
  lift_tree(shifted.trunc_y(prec), seeds, 0, seeds.size(), prec, lifted);
  std::vector<BiPoly> ext_factors = recombine(shifted, std::move(lifted), prec);
  for (auto& fac : ext_factors) fac = fac.shift_y(-c);

  // descend to the base field along Frobenius orbits when the good point had
  // to be taken in a proper extension
  std::vector<BiPoly> base_factors;
  if (!extended) {
    base_factors = std::move(ext_factors);
  } else {
    std::vector<bool> used(ext_factors.size(), false);
    for (size_t i = 0; i < ext_factors.size(); ++i) {
      if (used[i]) continue;
      BiPoly orbit_prod = ext_factors[i];
      BiPoly cur = ext_factors[i].frobenius_coeffs(base->k());
      used[i] = true;
      while (!(cur == ext_factors[i])) {
        bool matched = false;
        for (size_t j = 0; j < ext_factors.size(); ++j) {
          if (used[j] || !(ext_factors[j] == cur)) continue;
          used[j] = true;
          orbit_prod = orbit_prod * cur;
          matched = true;
          break;
        }
        require(matched, Errc::SeedProductMismatch, "frobenius orbit left the factor set");
        cur = cur.frobenius_coeffs(base->k());
      }
      auto pulled = orbit_prod.pull_into(base);
      require(pulled.has_value(), Errc::SeedProductMismatch,
              "orbit product not defined over the base field");
      base_factors.push_back(std::move(*pulled));
    }
  }

  PhiFactorization out;
  std::vector<LinearPoly> linears;
  std::vector<BiPoly> nonlinear;
  for (const auto& fac : base_factors) {
    if (fac.deg_x() == 1) {
      UniPoly ell = -fac.coeff_x(0);  // x - ell(y)
      require(!ell.is_zero() && ell.degree() == 1, Errc::SeedProductMismatch,
              "linear factor of phi is not linear in y");
      linears.emplace_back(ell.coeff(1), ell.coeff(0));
    } else {
      nonlinear.push_back(fac);
    }
  }

  LinearPoly ident = LinearPoly::identity(base);
  auto it = std::find(linears.begin(), linears.end(), ident);
  require(it != linears.end(), Errc::SeedProductMismatch, "factor x - y is missing");
  linears.erase(it);
  std::sort(linears.begin(), linears.end());
  linears.insert(linears.begin(), ident);
  std::sort(nonlinear.begin(), nonlinear.end());

  out.s = static_cast<int>(linears.size());
  out.r = out.s + static_cast<int>(nonlinear.size());
  out.linear_parts = std::move(linears);
  out.nonlinear = std::move(nonlinear);

  // re-multiplication identity; cheap at desk scale and a hard guarantee
  BiPoly prod = BiPoly::from_x(UniPoly::constant(base->one()));
  for (int i = 0; i < out.r; ++i) prod = prod * out.factor_at(i, base);
  require(prod == BiPoly::phi(f), Errc::SeedProductMismatch,
          "factor_phi output does not multiply back to f(x) - f(y)");
  int degsum = 0;
  for (int i = 0; i < out.r; ++i) degsum += out.deg_of_factor(i);
  require(degsum == n && out.s >= 1, Errc::SeedProductMismatch,
          "factor degrees do not sum to n");
  return out;
}

std::vector<FieldElement> split_roots(const UniPoly& u, Rng& rng) {
  std::vector<FieldElement> roots;
  UniPoly g = u;
  if (g.is_constant()) return roots;
  // strip to distinct linear factors via the field equation x^q - x
  std::vector<UniPoly> stack{g};
  while (!stack.empty()) {
    UniPoly cur = stack.back();
    stack.pop_back();
    if (cur.is_constant()) continue;
    if (cur.degree() == 1) {
      roots.push_back(-(cur.coeff(0) / cur.coeff(1)));
      continue;
    }
    Field f = cur.field();
    const uint32_t p = f->p();
    for (int attempt = 0;; ++attempt) {
      assert(attempt < 512);
      UniPoly split;
      if (p == 2) {
        UniPoly r = random_poly(f, std::max(1, cur.degree() - 1), rng);
        UniPoly acc = poly_mod(r, cur);
        UniPoly t = acc;
        for (uint32_t i = 1; i < f->k(); ++i) {
          t = poly_mod(t * t, cur);
          acc = acc + t;
        }
        split = gcd(cur, acc);
      } else {
        BigUint e = BigUint::prime_power(p, f->k());
        e.sub_small(1);
        e.shr1();
        UniPoly r(f, {f->random_element(rng), f->one()});
        UniPoly t = poly_powmod_big(r, e, cur);
        t = t - UniPoly::constant(f->one());
        split = gcd(cur, t);
      }
      if (!split.is_constant() && split.degree() < cur.degree()) {
        stack.push_back(split);
        stack.push_back(divrem(cur, split).first);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<FieldElement, Field>> find_roots(const UniPoly& u, Rng& rng) {
  require(!u.is_constant(), Errc::ConstantInput, "find_roots needs a non-constant input");
  Field f = u.field();
  auto factors = factor_univariate(u, rng);
  std::vector<std::pair<FieldElement, Field>> out;
  for (const auto& [irr, mult] : factors) {
    if (irr.degree() == 1) out.emplace_back(-irr.coeff(0), f);
  }
  if (!out.empty()) {
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  int dmin = 0;
  const UniPoly* wmin = nullptr;
  for (const auto& [irr, mult] : factors) {
    if (wmin == nullptr || irr.degree() < dmin) {
      dmin = irr.degree();
      wmin = &irr;
    }
  }
  Field ext = FiniteField::get(f->p(), f->k() * static_cast<uint32_t>(dmin));
  UniPoly we = wmin->map_into(ext);
  for (const auto& root : split_roots(we, rng)) out.emplace_back(root, ext);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace polydec
