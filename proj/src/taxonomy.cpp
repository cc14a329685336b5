#include "polydec/taxonomy.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "polydec/factor.hpp"

namespace polydec {

std::vector<CriticalValue> critical_values(const UniPoly& f, Rng& rng) {
  UniPoly d = f.derivative();
  require(!d.is_zero(), Errc::DerivativeZero, "critical values need f' != 0");
  Field base = f.field();

  std::vector<CriticalValue> out;
  if (d.is_constant()) return out;  // no finite critical value

  auto factors = factor_univariate(d, rng);
  uint32_t lcm = 1;
  for (const auto& [w, mult] : factors)
    lcm = std::lcm(lcm, static_cast<uint32_t>(w.degree()));
  Field ext = lcm == 1 ? base : FiniteField::get(base->p(), base->k() * lcm);

  UniPoly fe = ext == base ? f : f.map_into(ext);
  std::set<FieldElement> values;
  for (const auto& [w, mult] : factors) {
    UniPoly we = ext == base ? w : w.map_into(ext);
    for (const auto& root : split_roots(we, rng)) values.insert(fe(root));
  }
  for (const auto& c : values) {
    CriticalValue cv{c, ext, {}};
    UniPoly shifted = fe - UniPoly::constant(c);
    for (const auto& [w, mult] : factor_univariate(shifted, rng))
      for (int i = 0; i < w.degree(); ++i) cv.multiplicities.push_back(mult);
    std::sort(cv.multiplicities.begin(), cv.multiplicities.end());
    // keep only genuine critical values (some f(root of f') may be simple
    // when multiplicities merge; they are not, but the check is cheap)
    if (*std::max_element(cv.multiplicities.begin(), cv.multiplicities.end()) > 1)
      out.push_back(std::move(cv));
  }
  return out;
}

namespace {

UniPoly case1_shape(Field f, int ell, int m, const FieldElement& a) {
  // x(x^ell - a)^m
  UniPoly base = UniPoly::monomial(f, ell, f->one()) - UniPoly::constant(a);
  return UniPoly::x(f) * base.pow(static_cast<uint32_t>(m));
}

// a from g = x(x^ell - a)^m via the coefficient of x^(ell(m-1)) in g/x,
// then verification by expansion
std::optional<FieldElement> match_case1_shape(const UniPoly& g, int ell, int m) {
  Field f = g.field();
  UniPoly inner = divrem(g, UniPoly::x(f)).first;  // g/x, exact for normal g
  FieldElement coeff = inner.coeff(ell * (m - 1));
  FieldElement a = -(coeff / f->from_int(m));  // m < p, invertible
  if (a.is_zero()) return std::nullopt;
  if (case1_shape(f, ell, m, a) == g) return a;
  return std::nullopt;
}

int x_multiplicity(const UniPoly& g) {
  int r = 0;
  while (r <= g.degree() && g.coeff(r).is_zero()) ++r;
  return r;
}

std::optional<CaseIIRecord> match_case2_shape(const UniPoly& g, const UniPoly& h,
                                              uint32_t p) {
  Field f = g.field();
  const int r = x_multiplicity(g);
  if (r < 1 || r >= static_cast<int>(p)) return std::nullopt;
  // g = x^r (x - a)^(p - r)
  UniPoly rest = g;
  for (int i = 0; i < r; ++i) rest = divrem(rest, UniPoly::x(f)).first;
  if (rest.degree() != static_cast<int>(p) - r) return std::nullopt;
  // rest must be (x - a)^(p - r): read a off the trailing coefficient
  // (-a)^(p-r) and verify
  CaseIIRecord rec;
  rec.r = r;
  bool found = false;
  for (uint64_t i = 1; i < f->order(); ++i) {
    FieldElement a = f->element_at(i);
    UniPoly pow = (UniPoly::x(f) - UniPoly::constant(a)).pow(p - r);
    if (pow == rest) {
      rec.a = a;
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;

  // h = x^(p-r) q with q squarefree of degree r
  if (x_multiplicity(h) < static_cast<int>(p) - r) return std::nullopt;
  UniPoly q = h;
  for (int i = 0; i < static_cast<int>(p) - r; ++i) q = divrem(q, UniPoly::x(f)).first;
  if (q.degree() != r) return std::nullopt;
  if (!q.is_constant() && !gcd(q, q.derivative()).is_constant()) return std::nullopt;
  rec.q = q;

  // h - a = (x - b)^r qtilde with qtilde squarefree of degree p - r
  UniPoly ha = h - UniPoly::constant(rec.a);
  for (uint64_t i = 1; i < f->order(); ++i) {
    FieldElement b = f->element_at(i);
    UniPoly pw = (UniPoly::x(f) - UniPoly::constant(b)).pow(r);
    auto [quot, rem] = divrem(ha, pw);
    if (!rem.is_zero()) continue;
    if (quot.degree() != static_cast<int>(p) - r) continue;
    if (!gcd(quot, quot.derivative()).is_constant()) continue;
    rec.b = b;
    rec.qtilde = quot;
    return rec;
  }
  return std::nullopt;
}

struct CaseMatch {
  TaxonomyCase which;
  int m = 0;
  int ell = 0;
  std::vector<CaseIRecord> rec1;
  std::vector<CaseIIRecord> rec2;
};

std::optional<CaseMatch> try_case1(const std::vector<std::pair<UniPoly, UniPoly>>& decs,
                                   uint32_t p) {
  for (int m = 1; m < static_cast<int>(p); ++m) {
    if ((static_cast<int>(p) - 1) % m != 0) continue;
    int ell = (static_cast<int>(p) - 1) / m;
    std::vector<CaseIRecord> recs;
    bool all = true;
    for (const auto& [g, h] : decs) {
      auto a = match_case1_shape(g, ell, m);
      auto b = match_case1_shape(h, ell, m);
      if (!a || !b) {
        all = false;
        break;
      }
      recs.push_back({*a, *b});
    }
    if (all) return CaseMatch{TaxonomyCase::I, m, ell, std::move(recs), {}};
  }
  return std::nullopt;
}

std::optional<CaseMatch> try_case2(const std::vector<std::pair<UniPoly, UniPoly>>& decs,
                                   uint32_t p) {
  std::vector<CaseIIRecord> recs;
  std::set<int> ms;
  for (const auto& [g, h] : decs) {
    auto rec = match_case2_shape(g, h, p);
    if (!rec) return std::nullopt;
    ms.insert(std::min(rec->r, static_cast<int>(p) - rec->r));
    recs.push_back(std::move(*rec));
  }
  if (ms.size() != 1) return std::nullopt;
  int m = *ms.begin();
  if (m <= 1 || m >= static_cast<int>(p) - 1) return std::nullopt;
  return CaseMatch{TaxonomyCase::II, m, 0, {}, std::move(recs)};
}

}  // namespace

TaxonomyReport classify_p2(const UniPoly& f, const OracleOptions& opt) {
  Field field = f.field();
  const uint32_t p = field->p();
  require(!f.is_zero() && f.is_normal(), Errc::NotApplicable, "input must be normal");
  require(f.degree() == static_cast<int>(p) * static_cast<int>(p), Errc::NotApplicable,
          "degree must be p^2");
  require(!f.derivative().is_zero(), Errc::NotApplicable, "f' must not vanish");

  auto decs = enumerate_right_components(f, static_cast<int>(p), opt);
  require(decs.size() >= 2, Errc::NotApplicable,
          "classification needs at least two normal decompositions");

  // locate the conjugation shift: the unique critical value when one exists,
  // w = 0 in the additive-type situation without finite critical values
  Rng rng(0x7a5c0117u);
  std::vector<FieldElement> w_candidates;
  auto crit = critical_values(f, rng);
  if (crit.empty()) {
    w_candidates.push_back(field->zero());
  } else {
    require(crit.size() == 1, Errc::NoCaseMatches,
            "more than one critical value for a multi-decomposition input");
    auto c = pull_back(crit[0].c, field);
    require(c.has_value(), Errc::NoCaseMatches, "critical value is not rational");
    for (uint64_t i = 0; i < field->order(); ++i) {
      FieldElement w = field->element_at(i);
      if (f(w) == *c) w_candidates.push_back(w);
    }
    require(!w_candidates.empty(), Errc::NoCaseMatches,
            "no rational root of f - c to conjugate at");
  }

  std::optional<TaxonomyReport> found;
  bool found_case1 = false, found_case2 = false;
  for (const auto& w : w_candidates) {
    UniPoly fhat = conjugate(f, w);
    std::vector<std::pair<UniPoly, UniPoly>> conj_decs;
    for (const auto& [g, h] : decs) {
      FieldElement hw = h(w);
      conj_decs.emplace_back(conjugate(g, hw), conjugate(h, w));
    }
    auto m1 = try_case1(conj_decs, p);
    auto m2 = try_case2(conj_decs, p);
    if (m1) found_case1 = true;
    if (m2) found_case2 = true;
    if ((m1 || m2) && !found) {
      const CaseMatch& m = m1 ? *m1 : *m2;
      TaxonomyReport rep;
      rep.taxonomy_case = m.which;
      rep.w = w;
      rep.m = m.m;
      rep.ell = m.ell;
      rep.case1 = m.rec1;
      rep.case2 = m.rec2;
      rep.conjugated = fhat;
      rep.conj_decompositions = std::move(conj_decs);
      found = std::move(rep);
    }
  }
  require(!(found_case1 && found_case2), Errc::NoCaseMatches,
          "both cases matched; exclusivity is violated");
  require(found.has_value(), Errc::NoCaseMatches, "no case of the classification matches");
  return *found;
}

FamilyOutput gen_case1_family(Field field, const FamilyParams& params) {
  const int p = static_cast<int>(field->p());
  require(params.eps == 0 || params.eps == 1, Errc::NotApplicable, "eps must be 0 or 1");
  require(!params.u.is_zero() && !params.s.is_zero(), Errc::NotApplicable,
          "u and s must be nonzero");
  require(params.ell >= 1 && (p - 1) % params.ell == 0, Errc::NotApplicable,
          "ell must divide p - 1");
  const int m = (p - 1) / params.ell;
  const int ell = params.ell;

  FieldElement eps = field->from_int(params.eps);
  FieldElement usp = params.u * params.s.pow(static_cast<uint64_t>(p));
  FieldElement usp1 = params.u * params.s.pow(static_cast<uint64_t>(p) + 1);

  // f = x (x^(l(p+1)) - eps u s^p x^l + u s^(p+1))^m
  UniPoly inner = UniPoly::monomial(field, ell * (p + 1), field->one()) -
                  UniPoly::monomial(field, ell, eps * usp) +
                  UniPoly::constant(usp1);
  FamilyOutput out;
  out.f = UniPoly::x(field) * inner.pow(static_cast<uint32_t>(m));

  for (uint64_t i = 0; i < field->order(); ++i) {
    FieldElement t = field->element_at(i);
    if (t.is_zero()) continue;
    // t^(p+1) - eps u t + u = 0
    FieldElement val = t.pow(static_cast<uint64_t>(p) + 1) - eps * params.u * t + params.u;
    if (!val.is_zero()) continue;
    FieldElement a = usp / t;
    FieldElement b = params.s * t;
    UniPoly g = case1_shape(field, ell, m, a);
    UniPoly h = case1_shape(field, ell, m, b);
    require(compose(g, h) == out.f, Errc::CompositionMismatch,
            "family pair does not compose to the family polynomial");
    out.decompositions.push_back({t, std::move(g), std::move(h)});
  }
  for (size_t i = 0; i < out.decompositions.size(); ++i)
    for (size_t j = i + 1; j < out.decompositions.size(); ++j)
      require(!(out.decompositions[i].h == out.decompositions[j].h),
              Errc::CompositionMismatch, "family decompositions are not pairwise distinct");
  return out;
}

FamilyParams case1_params_from_pair(const FieldElement& a, const FieldElement& b, int ell) {
  Field field = a.field();
  const uint64_t p = field->p();
  FamilyParams params;
  params.ell = ell;
  params.m = (static_cast<int>(p) - 1) / ell;
  FieldElement bp_a = b.pow(p) + a;
  if (bp_a.is_zero()) {
    params.eps = 0;
    params.s = field->one();
    params.u = a * b;
  } else {
    params.eps = 1;
    params.s = (a * b) / bp_a;
    params.u = (a * b) / params.s.pow(p + 1);
  }
  return params;
}

namespace {

// verify the parameter-extraction round trip for one Case I record
bool case1_round_trip(const TaxonomyReport& rep, const CaseIRecord& rec,
                      const UniPoly& g, const UniPoly& h) {
  Field field = rep.conjugated.field();
  const uint64_t p = field->p();
  FamilyParams params = case1_params_from_pair(rec.a, rec.b, rep.ell);
  FieldElement t = params.eps == 0 ? rec.b : rec.b / params.s;
  // t^(p+1) - eps u t + u = 0, b = s t, a = u s^p t^(-1)
  FieldElement eps = field->from_int(params.eps);
  if (!(t.pow(p + 1) - eps * params.u * t + params.u).is_zero()) return false;
  if (!(params.s * t == rec.b)) return false;
  if (!(params.u * params.s.pow(p) / t == rec.a)) return false;
  FamilyOutput fam = gen_case1_family(field, params);
  if (!(fam.f == rep.conjugated)) return false;
  for (const auto& dec : fam.decompositions)
    if (dec.t == t) return dec.g == g && dec.h == h;
  return false;
}

}  // namespace

CensusResult census_p2(Field field, CensusMode mode, uint64_t samples, uint64_t seed,
                       const OracleOptions& opt) {
  const uint32_t p = field->p();
  require(field->order_fits_u64(), Errc::BudgetExceeded, "census field too large");
  uint64_t per_side = 1;
  for (uint32_t i = 0; i + 1 < p; ++i) per_side *= field->order();

  CensusResult res;
  std::set<UniPoly> seen;
  std::vector<UniPoly> inputs;

  if (mode == CensusMode::Exhaustive) {
    require(per_side <= (1u << 20) && per_side * per_side <= opt.budget,
            Errc::BudgetExceeded, "exhaustive census above budget");
    res.composites_seen = per_side * per_side;
    for (uint64_t i = 0; i < per_side; ++i) {
      UniPoly g = normal_poly_at(field, static_cast<int>(p), i);
      for (uint64_t j = 0; j < per_side; ++j) {
        UniPoly h = normal_poly_at(field, static_cast<int>(p), j);
        UniPoly f = compose(g, h);
        if (seen.insert(f).second) inputs.push_back(std::move(f));
      }
    }
  } else {
    Rng rng(seed);
    res.composites_seen = samples;
    for (uint64_t i = 0; i < samples; ++i) {
      UniPoly g = normal_poly_at(field, static_cast<int>(p), rng.below(per_side));
      UniPoly h = normal_poly_at(field, static_cast<int>(p), rng.below(per_side));
      UniPoly f = compose(g, h);
      if (seen.insert(f).second) inputs.push_back(std::move(f));
    }
  }
  res.distinct_f = inputs.size();

  std::vector<std::optional<CensusRow>> rows(inputs.size());
  std::vector<uint8_t> fprime_zero(inputs.size(), 0);
  std::exception_ptr first_error;

  // the loop below is the parallel axis; keep the inner enumeration serial
  OracleOptions inner = opt;
  inner.parallel = false;

#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < static_cast<int64_t>(inputs.size()); ++i) {
    try {
      const UniPoly& f = inputs[i];
      if (f.derivative().is_zero()) {
        fprime_zero[i] = 1;
        continue;
      }
      auto decs = enumerate_right_components(f, static_cast<int>(p), inner);
      if (decs.size() < 2) continue;
      TaxonomyReport rep = classify_p2(f, inner);
      CensusRow row;
      row.f = f;
      row.n_decompositions = static_cast<int>(decs.size());
      row.taxonomy_case = rep.taxonomy_case;
      row.m = rep.m;
      if (rep.taxonomy_case == TaxonomyCase::I) {
        row.ell_or_r = rep.ell;
        row.parametrization_ok = true;
        for (size_t d = 0; d < rep.case1.size(); ++d) {
          if (!case1_round_trip(rep, rep.case1[d], rep.conj_decompositions[d].first,
                                rep.conj_decompositions[d].second))
            row.parametrization_ok = false;
        }
      } else {
        row.ell_or_r = rep.case2.empty() ? 0 : rep.case2.front().r;
        row.parametrization_ok = true;  // no parametrization is asserted for Case II
      }
      rows[i] = std::move(row);
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  for (size_t i = 0; i < rows.size(); ++i) {
    if (fprime_zero[i]) ++res.derivative_zero;
    if (!rows[i]) continue;
    ++res.multi_collision;
    if (rows[i]->taxonomy_case == TaxonomyCase::I)
      ++res.case1_count;
    else
      ++res.case2_count;
    res.rows.push_back(std::move(*rows[i]));
  }
  std::sort(res.rows.begin(), res.rows.end(),
            [](const CensusRow& a, const CensusRow& b) { return a.f < b.f; });
  return res;
}

}  // namespace polydec
