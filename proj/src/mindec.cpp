#include "polydec/mindec.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>

#include "polydec/blocks.hpp"

namespace polydec {

CoprimeCheckConfig CoprimeCheckConfig::for_input(Field f, int n, uint64_t seed, int reps,
                                                 std::optional<CoprimeMode> mode) {
  require(reps >= 3, Errc::NotApplicable, "repetition count must be >= 3");
  CoprimeCheckConfig cfg;
  cfg.reps = reps;
  cfg.seed = seed;
  // smallest d with 2^d >= (16n)^4, then rounded up to a multiple of k so
  // that K' contains F
  uint64_t x = 16ull * static_cast<uint64_t>(n);
  uint64_t x4 = x * x * x * x;
  uint32_t d = static_cast<uint32_t>(std::bit_width(x4 - 1));
  uint32_t k = f->k();
  uint32_t kp = std::max(k, d);
  if (kp % k != 0) kp += k - kp % k;
  cfg.kprime_degree = static_cast<int>(kp);
  cfg.mode = mode ? *mode : (n <= 12 ? CoprimeMode::Exact : CoprimeMode::Randomized);
  return cfg;
}

namespace {

void sanity_check_G(const BiPoly& G) {
  require(!G.is_zero() && G.is_monic_x() && G.deg_x() >= 2, Errc::NotIrreducible,
          "curve polynomial must be monic of x-degree >= 2");
  require(G.content_y().is_constant(), Errc::NotIrreducible,
          "curve polynomial must be primitive");
}

// Arithmetic in K'[y]/(w) for the randomized trial: the random root b of
// G(a, y) is carried by its minimal polynomial w over K' instead of by
// coordinates in an explicit extension; every conjugate root gives the same
// zero test, so this evaluates the same predicate as materializing b.
struct WCtx {
  UniPoly w;  // monic irreducible over K'

  UniPoly reduce(const UniPoly& e) const { return divrem(e, w).second; }
  UniPoly mul(const UniPoly& x, const UniPoly& y) const { return reduce(x * y); }
  UniPoly inv(const UniPoly& e) const {
    auto [g, s, t] = ext_gcd(e, w);
    require(g.is_constant() && !g.is_zero(), Errc::NotInvertible,
            "zero divisor modulo the specialized curve factor");
    return reduce(s * g.coeff(0).inv());
  }
};

// polynomial in x whose coefficients are classes mod w
using WPoly = std::vector<UniPoly>;

void wp_trim(WPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

WPoly wp_from(const BiPoly& psi, RootVar var, const FieldElement& a, const WCtx& ctx,
              Field kprime) {
  WPoly out;
  out.reserve(psi.rows().size());
  for (const auto& row : psi.rows()) {
    UniPoly re = row.map_into(kprime);
    if (var == RootVar::Alpha) {
      out.push_back(UniPoly::constant(re(a)));
    } else {
      out.push_back(ctx.reduce(re));  // the row evaluated at the class of y
    }
  }
  wp_trim(out);
  return out;
}

// gcd( . , . ) == 1 over (K'[y]/(w))[x]; both inputs monic in x
bool wp_coprime(WPoly a, WPoly b, const WCtx& ctx) {
  while (!b.empty()) {
    if (b.size() == 1) return true;
    UniPoly lcinv = ctx.inv(b.back());
    while (a.size() >= b.size()) {
      UniPoly c = ctx.mul(a.back(), lcinv);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j + 1 < b.size(); ++j)
        a[off + j] = ctx.reduce(a[off + j] - ctx.mul(c, b[j]));
      a.pop_back();
      wp_trim(a);
    }
    std::swap(a, b);
  }
  return false;
}

}  // namespace

bool coprime_trial(const BiPoly& G, const BiPoly& u, RootVar uv, const BiPoly& v,
                   RootVar vv, int kprime_degree, Rng& rng) {
  Field f = G.field();
  Field kprime = FiniteField::get(f->p(), static_cast<uint32_t>(kprime_degree));
  FieldElement a = kprime->random_element(rng);
  UniPoly g_at_a = G.map_into(kprime).eval_y(a);
  // b is a uniformly random root of G(a, y): pick an irreducible factor of
  // the squarefree part with probability proportional to its degree
  UniPoly distinct = squarefree_part(g_at_a);
  auto factors = factor_univariate(distinct, rng);
  uint64_t pick = rng.below(static_cast<uint64_t>(distinct.degree()));
  UniPoly w = factors.back().first;
  uint64_t acc = 0;
  for (const auto& [irr, mult] : factors) {
    acc += static_cast<uint64_t>(irr.degree());
    if (pick < acc) {
      w = irr;
      break;
    }
  }
  WCtx ctx{w};
  WPoly us = wp_from(u, uv, a, ctx, kprime);
  WPoly vs = wp_from(v, vv, a, ctx, kprime);
  // r = res(u(a,b,x), v(a,b,x)) != 0 iff the specialized pair is coprime
  return wp_coprime(std::move(us), std::move(vs), ctx);
}

bool coprime_randomized(const BiPoly& G, const BiPoly& u, RootVar uv, const BiPoly& v,
                        RootVar vv, const CoprimeCheckConfig& cfg, uint64_t stream_tag) {
  sanity_check_G(G);
  Rng base(cfg.seed);
  Rng edge_stream = base.substream(stream_tag);
  for (int trial = 0; trial < cfg.reps; ++trial) {
    Rng trial_rng = edge_stream.substream(static_cast<uint64_t>(trial));
    if (coprime_trial(G, u, uv, v, vv, cfg.kprime_degree, trial_rng)) return true;
  }
  return false;
}

// ---- exact coprimality: Euclid over L[x], L = F(y)[v]/(G) ----

namespace {

// polynomials in the beta variable v with rational-function coefficients
using RPoly = std::vector<RatFun>;

void rp_trim(RPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RPoly rp_mul(const RPoly& a, const RPoly& b, Field f) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, RatFun(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  rp_trim(r);
  return r;
}

RPoly rp_sub(RPoly a, const RPoly& b, Field f) {
  if (a.size() < b.size()) a.resize(b.size(), RatFun(f));
  for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  rp_trim(a);
  return a;
}

// remainder of a by b, b with invertible leading coefficient
RPoly rp_mod(RPoly a, const RPoly& b, Field) {
  rp_trim(a);
  RatFun lcinv = b.back().inv();
  while (a.size() >= b.size()) {
    RatFun c = a.back() * lcinv;
    size_t off = a.size() - b.size();
    for (size_t j = 0; j + 1 < b.size(); ++j) a[off + j] = a[off + j] - c * b[j];
    a.pop_back();
    rp_trim(a);
  }
  return a;
}

// the modulus G as an RPoly in v (monic)
RPoly rp_of_G(const BiPoly& G) {
  RPoly g;
  g.reserve(G.rows().size());
  for (const auto& row : G.rows()) g.push_back(RatFun::of(row));
  return g;
}

// elements of L are RPoly of degree < deg_v(G), always reduced
struct LCtx {
  Field f;
  RPoly G;

  RPoly reduce(RPoly a) const { return a.size() >= G.size() ? rp_mod(std::move(a), G, f) : a; }

  RPoly mul(const RPoly& a, const RPoly& b) const { return reduce(rp_mul(a, b, f)); }

  RPoly inv(const RPoly& e) const {
    // extended Euclid of (e, G) over F(y)[v]
    require(!e.empty(), Errc::NotInvertible, "inverse of zero in F(alpha)[beta]/(G)");
    RPoly r0 = G, r1 = e;
    RPoly s0, s1{RatFun::of(UniPoly::constant(f->one()))};
    while (!r1.empty()) {
      // divide r0 by r1
      RPoly q;
      RPoly rem = r0;
      rp_trim(rem);
      RatFun lcinv = r1.back().inv();
      if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, RatFun(f));
      while (rem.size() >= r1.size()) {
        RatFun c = rem.back() * lcinv;
        size_t off = rem.size() - r1.size();
        q[off] = c;
        for (size_t j = 0; j + 1 < r1.size(); ++j) rem[off + j] = rem[off + j] - c * r1[j];
        rem.pop_back();
        rp_trim(rem);
      }
      RPoly s2 = rp_sub(std::move(s0), rp_mul(q, s1, f), f);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 = gcd(e, G); a nonzero constant iff G is irreducible
    require(r0.size() == 1, Errc::NotInvertible,
            "zero divisor found; curve polynomial is reducible");
    RatFun ginv = r0[0].inv();
    for (auto& c : s0) c = c * ginv;
    rp_trim(s0);
    return s0;
  }
};

// u as a polynomial in x with L coefficients
std::vector<RPoly> to_lpoly(const BiPoly& psi, RootVar var, const LCtx& ctx) {
  std::vector<RPoly> out;
  out.reserve(psi.rows().size());
  for (const auto& row : psi.rows()) {
    RPoly c;
    if (var == RootVar::Alpha) {
      if (!row.is_zero()) c.push_back(RatFun::of(row));
    } else {
      // the row is a polynomial in beta: v-coefficients are constants
      c.reserve(row.coeffs().size());
      for (const auto& e : row.coeffs()) c.push_back(RatFun::of(UniPoly::constant(e)));
      rp_trim(c);
    }
    out.push_back(ctx.reduce(std::move(c)));
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace

bool coprime_exact(const BiPoly& G, const BiPoly& u, RootVar uv, const BiPoly& v,
                   RootVar vv) {
  sanity_check_G(G);
  LCtx ctx{G.field(), rp_of_G(G)};
  std::vector<RPoly> a = to_lpoly(u, uv, ctx);
  std::vector<RPoly> b = to_lpoly(v, vv, ctx);
  assert(!a.empty() && !b.empty());
  // Euclid over L[x]
  while (!b.empty()) {
    if (b.size() == 1) return true;  // unit gcd
    // a mod b
    RPoly lcinv = ctx.inv(b.back());
    while (a.size() >= b.size()) {
      RPoly c = ctx.mul(a.back(), lcinv);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j + 1 < b.size(); ++j)
        a[off + j] = rp_sub(a[off + j], ctx.mul(c, b[j]), ctx.f);
      a.pop_back();
      while (!a.empty() && a.back().empty()) a.pop_back();
    }
    std::swap(a, b);
  }
  return false;  // nontrivial common factor
}

// ---- the two phases of minDec ----

namespace {

// h from a block given as factor indices: multiply the factors, check that
// every x-coefficient above the constant one is free of y, drop the constant
UniPoly block_to_h(const PhiFactorization& fac, const std::vector<int>& indices,
                   Field field) {
  BiPoly prod = BiPoly::from_x(UniPoly::constant(field->one()));
  for (int i : indices) prod = prod * fac.factor_at(i, field);
  std::vector<FieldElement> h(prod.rows().size(), field->zero());
  for (size_t m = 1; m < prod.rows().size(); ++m) {
    const UniPoly& row = prod.rows()[m];
    require(row.is_constant(), Errc::AlphaLeak,
            "non-constant coefficient depends on the root variable");
    h[m] = row.coeff(0);
  }
  return UniPoly(field, std::move(h));
}

Decomposition make_decomposition(const UniPoly& f, const UniPoly& h, Provenance prov) {
  auto g = taylor_left_component(f, h);
  require(g.has_value(), Errc::LeftComponentMissing,
          "no left component for a recovered block polynomial");
  return Decomposition{std::move(*g), h, std::move(prov)};
}

}  // namespace

std::vector<Decomposition> b_alpha_phase(const PhiFactorization& fac, const UniPoly& f) {
  std::vector<Decomposition> out;
  if (fac.s <= 1) return out;
  Field field = f.field();
  const int n = f.degree();

  PermGroup g = perms_from_linear_group(fac.linear_parts, fac.linear_parts);
  std::vector<Block> blocks = minimal_blocks(g, 0);
  for (const auto& blk : blocks) {
    if (static_cast<int>(blk.members.size()) >= n) continue;
    UniPoly h = block_to_h(fac, blk.members, field);
    out.push_back(make_decomposition(f, h, Provenance{Phase::BAlpha, blk.members, -1}));
  }
  return out;
}

GammaGraph gamma_component(const PhiFactorization& fac, int nu,
                           const CoprimeCheckConfig& cfg, bool exact) {
  assert(nu >= fac.s && nu < fac.r);
  const BiPoly& G = fac.nonlinear[nu - fac.s];
  sanity_check_G(G);
  Field field = G.field();
  const int r = fac.r;
  const int s = fac.s;

  GammaGraph graph;
  graph.nu = nu;

  std::map<std::pair<int, int>, bool> cache;
  auto edge = [&](int i, int j) -> bool {
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    bool result;
    if (i < s && j < s) {
      // two linear factors never meet over the curve: the difference has
      // beta-degree 1 < deg_x(G)
      result = false;
    } else if (i < s || j < s) {
      // evaluation of the nonlinear side at the linear root; exact and cheap.
      // Layout for the reduction: x-slot = beta, y-slot = alpha, so that G
      // itself is the monic-in-x modulus.
      BiPoly p = BiPoly::zero(field);
      if (i < s) {
        const BiPoly& psi = fac.nonlinear[j - s];
        BiPoly mult = BiPoly::from_y(fac.linear_parts[i].to_poly());  // l_i(alpha)
        for (size_t m = psi.rows().size(); m-- > 0;)
          p = p * mult + BiPoly::from_x(psi.rows()[m]);  // rows are in beta here
      } else {
        const BiPoly& psi = fac.nonlinear[i - s];
        BiPoly mult = BiPoly::from_x(fac.linear_parts[j].to_poly());  // l_j(beta)
        for (size_t m = psi.rows().size(); m-- > 0;)
          p = p * mult + BiPoly::from_y(psi.rows()[m]);  // rows stay in alpha
      }
      result = divrem_x(p, G).second.is_zero();
    } else {
      const BiPoly& u = fac.nonlinear[i - s];
      const BiPoly& v = fac.nonlinear[j - s];
      if (exact) {
        result = !coprime_exact(G, u, RootVar::Alpha, v, RootVar::Beta);
      } else {
        uint64_t tag = (static_cast<uint64_t>(nu) << 40) ^
                       (static_cast<uint64_t>(i) << 20) ^ static_cast<uint64_t>(j);
        result = !coprime_randomized(G, u, RootVar::Alpha, v, RootVar::Beta, cfg, tag);
      }
    }
    cache.emplace(key, result);
    if (result) graph.edges.emplace_back(i, j);
    return result;
  };

  // bipartite BFS from the left vertex psi_1
  std::set<int> left{0}, right;
  std::vector<std::pair<bool, int>> queue{{true, 0}};  // (is_left, index)
  while (!queue.empty()) {
    auto [is_left, idx] = queue.back();
    queue.pop_back();
    if (is_left) {
      for (int j = 0; j < r; ++j) {
        if (right.count(j)) continue;
        if (edge(idx, j)) {
          right.insert(j);
          queue.emplace_back(false, j);
        }
      }
    } else {
      for (int i = 0; i < r; ++i) {
        if (left.count(i)) continue;
        if (edge(i, idx)) {
          left.insert(i);
          queue.emplace_back(true, i);
        }
      }
    }
  }
  graph.component_of_1.assign(left.begin(), left.end());
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

std::vector<Decomposition> gamma_phase(const PhiFactorization& fac, const UniPoly& f,
                                       const CoprimeCheckConfig& cfg) {
  Field field = f.field();
  const bool exact = cfg.mode == CoprimeMode::Exact;
  const int count = fac.r - fac.s;
  std::vector<std::vector<Decomposition>> per_nu(count);
  std::exception_ptr first_error;

#pragma omp parallel for schedule(dynamic)
  for (int off = 0; off < count; ++off) {
    try {
      int nu = fac.s + off;
      GammaGraph graph = gamma_component(fac, nu, cfg, exact);
      if (static_cast<int>(graph.component_of_1.size()) == fac.r) continue;
      UniPoly h = block_to_h(fac, graph.component_of_1, field);
      per_nu[off].push_back(make_decomposition(
          f, h, Provenance{Phase::Gamma, graph.component_of_1, nu}));
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<Decomposition> out;
  for (auto& v : per_nu)
    for (auto& d : v) out.push_back(std::move(d));
  return out;
}

std::vector<Decomposition> min_decompositions(const UniPoly& f,
                                              const CoprimeCheckConfig& cfg) {
  require(!f.is_zero() && f.is_monic(), Errc::NotMonic,
          "minimal decompositions need a monic input");
  require(f.degree() >= 2, Errc::DegreeTooSmall, "degree must be at least 2");
  require(!f.derivative().is_zero(), Errc::DerivativeZero,
          "the derivative must not vanish");

  Rng rng = Rng(cfg.seed).substream(0x0fac);
  PhiFactorization fac = factor_phi(f, rng);

  std::vector<Decomposition> candidates = b_alpha_phase(fac, f);
  {
    std::vector<Decomposition> gamma = gamma_phase(fac, f, cfg);
    for (auto& d : gamma) candidates.push_back(std::move(d));
  }

  // dedupe by block index set; the index set determines h and vice versa
  std::map<std::vector<int>, Decomposition> by_block;
  for (auto& d : candidates) {
    auto key = d.prov.indices;
    by_block.emplace(std::move(key), std::move(d));
  }

  // the candidates are blocks; keep only inclusion-minimal ones
  std::vector<Decomposition> minimal;
  for (auto it = by_block.begin(); it != by_block.end(); ++it) {
    const auto& key = it->first;
    bool is_minimal = true;
    for (auto jt = by_block.begin(); jt != by_block.end(); ++jt) {
      if (jt == it) continue;
      const auto& other = jt->first;
      if (other.size() < key.size() &&
          std::includes(key.begin(), key.end(), other.begin(), other.end())) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(it->second);
  }

  for (const auto& d : minimal) {
    require(compose(d.g, d.h) == f, Errc::CompositionMismatch,
            "recovered pair does not compose to f");
    require(d.h.is_normal(), Errc::CompositionMismatch, "right component is not normal");
  }
  std::sort(minimal.begin(), minimal.end(), [](const Decomposition& a, const Decomposition& b) {
    if (a.h.degree() != b.h.degree()) return a.h.degree() < b.h.degree();
    if (!(a.h == b.h)) return a.h < b.h;
    return a.g < b.g;
  });
  return minimal;
}

std::vector<DecompositionNode> all_decompositions(const UniPoly& f,
                                                  const CoprimeCheckConfig& cfg) {
  std::vector<DecompositionNode> nodes;
  for (const auto& d : min_decompositions(f, cfg)) {
    DecompositionNode node{d, {}};
    if (d.g.degree() >= 4) {
      CoprimeCheckConfig sub = CoprimeCheckConfig::for_input(
          f.field(), d.g.degree(), cfg.seed, cfg.reps, cfg.mode);
      node.children = all_decompositions(d.g, sub);
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

}  // namespace polydec
