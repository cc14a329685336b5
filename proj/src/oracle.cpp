#include "polydec/oracle.hpp"

#include <algorithm>
#include <cassert>

namespace polydec {

namespace {

void check_enumeration_pre(const UniPoly& f, int d, const OracleOptions& opt) {
  require(!f.is_zero() && f.degree() >= 2, Errc::DegreeTooSmall, "oracle needs deg >= 2");
  require(d >= 2 && d < f.degree() && f.degree() % d == 0, Errc::NotApplicable,
          "degree must be a proper divisor of deg f");
  Field fd = f.field();
  require(fd->order_fits_u64(), Errc::BudgetExceeded, "field too large for enumeration");
  uint64_t candidates = 1;
  for (int i = 0; i < d - 1; ++i) {
    candidates *= fd->order();
    require(candidates <= opt.budget, Errc::BudgetExceeded,
            "candidate count exceeds the oracle budget");
  }
}

uint64_t candidate_count(Field fd, int d) {
  uint64_t c = 1;
  for (int i = 0; i < d - 1; ++i) c *= fd->order();
  return c;
}

}  // namespace

std::vector<std::pair<UniPoly, UniPoly>> enumerate_right_components_serial(
    const UniPoly& f, int d, const OracleOptions& opt) {
  check_enumeration_pre(f, d, opt);
  Field fd = f.field();
  const uint64_t total = candidate_count(fd, d);
  std::vector<std::pair<UniPoly, UniPoly>> out;
  for (uint64_t idx = 0; idx < total; ++idx) {
    UniPoly h = normal_poly_at(fd, d, idx);
    auto g = taylor_left_component(f, h);
    if (!g) continue;
    require(compose(*g, h) == f, Errc::CompositionMismatch,
            "oracle pair does not recompose");
    out.emplace_back(std::move(*g), std::move(h));
  }
  return out;
}

std::vector<std::pair<UniPoly, UniPoly>> enumerate_right_components(
    const UniPoly& f, int d, const OracleOptions& opt) {
  if (!opt.parallel) return enumerate_right_components_serial(f, d, opt);
  check_enumeration_pre(f, d, opt);
  Field fd = f.field();
  const int64_t total = static_cast<int64_t>(candidate_count(fd, d));
  std::vector<uint8_t> hit(total, 0);
  std::exception_ptr first_error;

#pragma omp parallel for schedule(static)
  for (int64_t idx = 0; idx < total; ++idx) {
    try {
      UniPoly h = normal_poly_at(fd, d, static_cast<uint64_t>(idx));
      if (taylor_left_component(f, h)) hit[idx] = 1;
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<std::pair<UniPoly, UniPoly>> out;
  for (int64_t idx = 0; idx < total; ++idx) {
    if (!hit[idx]) continue;
    UniPoly h = normal_poly_at(fd, d, static_cast<uint64_t>(idx));
    auto g = taylor_left_component(f, h);
    assert(g.has_value());
    require(compose(*g, h) == f, Errc::CompositionMismatch,
            "oracle pair does not recompose");
    out.emplace_back(std::move(*g), std::move(h));
  }
  return out;
}

std::vector<UniPoly> minimal_right_components(const UniPoly& f, const OracleOptions& opt) {
  require(!f.is_zero() && f.degree() >= 2, Errc::DegreeTooSmall, "oracle needs deg >= 2");
  std::vector<UniPoly> out;
  const int n = f.degree();
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    for (auto& [g, h] : enumerate_right_components(f, d, opt)) {
      if (oracle_indecomposable(h, opt)) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

bool oracle_indecomposable(const UniPoly& f, const OracleOptions& opt) {
  const int n = f.degree();
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    if (!enumerate_right_components(f, d, opt).empty()) return false;
  }
  return true;
}

BoundsReport audit_bounds(const UniPoly& f, const std::vector<UniPoly>& components) {
  BoundsReport rep;
  rep.n = f.degree();
  rep.total = static_cast<int>(components.size());

  int qmin = 0;
  for (int d = 2; d <= rep.n; ++d) {
    if (rep.n % d == 0 && is_prime(d)) {
      qmin = d;
      break;
    }
  }
  assert(qmin >= 2);
  rep.total_bound = (rep.n - 1) / (qmin - 1);
  rep.total_tight = rep.total == rep.total_bound;
  require(rep.total <= rep.total_bound, Errc::BoundViolated,
          "total minimal decomposition count exceeds (n-1)/(q-1)");

  std::vector<int> degrees;
  for (const auto& h : components) degrees.push_back(h.degree());
  std::sort(degrees.begin(), degrees.end());
  for (size_t i = 0; i < degrees.size();) {
    size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    DegreeBound db;
    db.d = degrees[i];
    db.count = static_cast<int>(j - i);
    db.bound = (rep.n - 1) / (db.d - 1);
    db.tight = db.count == db.bound;
    require(db.count <= db.bound, Errc::BoundViolated,
            "per-degree decomposition count exceeds (n-1)/(d-1)");
    rep.per_degree.push_back(db);
    i = j;
  }
  return rep;
}

}  // namespace polydec
