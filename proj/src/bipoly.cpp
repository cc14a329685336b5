#include "polydec/bipoly.hpp"

#include <cassert>
#include <sstream>

namespace polydec {

namespace {

UniPoly mul_trunc(const UniPoly& a, const UniPoly& b, int prec) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.field());
  Field f = a.field();
  int da = a.degree(), db = b.degree();
  int top = std::min(da + db, prec - 1);
  if (top < 0) return UniPoly::zero(f);
  std::vector<FieldElement> r(top + 1, f->zero());
  for (int i = 0; i <= da; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (int j = 0; j <= db && i + j <= top; ++j)
      r[i + j] = r[i + j] + a.coeffs()[i] * b.coeffs()[j];
  }
  return UniPoly(f, std::move(r));
}

}  // namespace

BiPoly::BiPoly(Field f, std::vector<UniPoly> rows) : field_(f), rows_(std::move(rows)) {
  trim();
}

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::from_x(const UniPoly& f) {
  std::vector<UniPoly> rows;
  rows.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) rows.push_back(UniPoly::constant(c));
  return BiPoly(f.field(), std::move(rows));
}

BiPoly BiPoly::from_y(const UniPoly& f) {
  if (f.is_zero()) return BiPoly(f.field());
  return BiPoly(f.field(), {f});
}

BiPoly BiPoly::phi(const UniPoly& f) { return from_x(f) - from_y(f); }

int BiPoly::deg_x() const {
  assert(!rows_.empty());
  return static_cast<int>(rows_.size()) - 1;
}

int BiPoly::deg_y() const {
  assert(!rows_.empty());
  int d = 0;
  for (const auto& r : rows_) d = std::max(d, r.deg_or(0));
  return d;
}

bool BiPoly::is_monic_x() const {
  return !rows_.empty() && rows_.back().is_constant() && !rows_.back().is_zero() &&
         rows_.back().coeff(0).is_one();
}

UniPoly BiPoly::coeff_x(int i) const {
  if (i < 0 || i >= static_cast<int>(rows_.size())) return UniPoly::zero(field_);
  return rows_[i];
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  assert(field_ == o.field_);
  std::vector<UniPoly> r(std::max(rows_.size(), o.rows_.size()), UniPoly::zero(field_));
  for (size_t i = 0; i < rows_.size(); ++i) r[i] = rows_[i];
  for (size_t i = 0; i < o.rows_.size(); ++i) r[i] = r[i] + o.rows_[i];
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  assert(field_ == o.field_);
  std::vector<UniPoly> r(std::max(rows_.size(), o.rows_.size()), UniPoly::zero(field_));
  for (size_t i = 0; i < rows_.size(); ++i) r[i] = rows_[i];
  for (size_t i = 0; i < o.rows_.size(); ++i) r[i] = r[i] - o.rows_[i];
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::operator-() const {
  std::vector<UniPoly> r = rows_;
  for (auto& row : r) row = -row;
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  assert(field_ == o.field_);
  if (is_zero() || o.is_zero()) return BiPoly(field_);
  std::vector<UniPoly> r(rows_.size() + o.rows_.size() - 1, UniPoly::zero(field_));
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].is_zero()) continue;
    for (size_t j = 0; j < o.rows_.size(); ++j) {
      if (o.rows_[j].is_zero()) continue;
      r[i + j] = r[i + j] + rows_[i] * o.rows_[j];
    }
  }
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::scale_y(const UniPoly& c) const {
  if (c.is_zero()) return BiPoly(field_);
  std::vector<UniPoly> r = rows_;
  for (auto& row : r) row = row * c;
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::mul_trunc_y(const BiPoly& o, int prec) const {
  assert(field_ == o.field_);
  if (is_zero() || o.is_zero()) return BiPoly(field_);
  std::vector<UniPoly> r(rows_.size() + o.rows_.size() - 1, UniPoly::zero(field_));
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].is_zero()) continue;
    for (size_t j = 0; j < o.rows_.size(); ++j) {
      if (o.rows_[j].is_zero()) continue;
      r[i + j] = r[i + j] + mul_trunc(rows_[i], o.rows_[j], prec);
    }
  }
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::trunc_y(int prec) const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) {
    if (row.is_zero() || row.degree() < prec) {
      r.push_back(row);
    } else {
      std::vector<FieldElement> c(row.coeffs().begin(), row.coeffs().begin() + prec);
      r.push_back(UniPoly(field_, std::move(c)));
    }
  }
  return BiPoly(field_, std::move(r));
}

UniPoly BiPoly::eval_y(const FieldElement& c) const {
  std::vector<FieldElement> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(row(c));
  return UniPoly(field_, std::move(r));
}

UniPoly BiPoly::eval_x(const FieldElement& c) const {
  UniPoly acc = UniPoly::zero(field_);
  for (size_t i = rows_.size(); i-- > 0;) acc = acc * UniPoly::constant(c) + rows_[i];
  return acc;
}

UniPoly BiPoly::subst_x_poly(const UniPoly& u) const {
  UniPoly acc = UniPoly::zero(field_);
  for (size_t i = rows_.size(); i-- > 0;) acc = acc * u + rows_[i];
  return acc;
}

BiPoly BiPoly::shift_y(const FieldElement& w) const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(row.shift_var(w));
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::swap_xy() const {
  if (is_zero()) return *this;
  int dy = deg_y();
  std::vector<UniPoly> out;
  out.reserve(dy + 1);
  for (int j = 0; j <= dy; ++j) {
    std::vector<FieldElement> c;
    c.reserve(rows_.size());
    for (const auto& row : rows_) c.push_back(row.coeff(j));
    out.push_back(UniPoly(field_, std::move(c)));
  }
  return BiPoly(field_, std::move(out));
}

UniPoly BiPoly::content_y() const {
  UniPoly g = UniPoly::zero(field_);
  for (const auto& row : rows_) {
    if (row.is_zero()) continue;
    g = g.is_zero() ? row.monic() : gcd(g, row);
    if (g.is_constant()) break;
  }
  return g;
}

BiPoly BiPoly::map_into(Field target) const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(row.map_into(target));
  return BiPoly(target, std::move(r));
}

std::optional<BiPoly> BiPoly::pull_into(Field source) const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) {
    auto p = row.pull_into(source);
    if (!p) return std::nullopt;
    r.push_back(std::move(*p));
  }
  return BiPoly(source, std::move(r));
}

BiPoly BiPoly::frobenius_coeffs(uint32_t j) const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<FieldElement> c;
    c.reserve(row.coeffs().size());
    for (const auto& e : row.coeffs()) c.push_back(e.frobenius_power(j));
    r.push_back(UniPoly(field_, std::move(c)));
  }
  return BiPoly(field_, std::move(r));
}

bool BiPoly::operator<(const BiPoly& o) const {
  if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
  for (size_t i = rows_.size(); i-- > 0;) {
    if (!(rows_[i] == o.rows_[i])) return rows_[i] < o.rows_[i];
  }
  return false;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = rows_.size(); i-- > 0;) {
    const UniPoly& row = rows_[i];
    if (row.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string rs = row.to_string("y");
    bool is_unit = row.is_constant() && row.coeff(0).is_one();
    if (i == 0) {
      os << rs;
      continue;
    }
    if (!is_unit) {
      bool wrap = rs.find('+') != std::string::npos;
      if (wrap) os << "(" << rs << ")";
      else os << rs;
      os << "*";
    }
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<BiPoly, BiPoly> divrem_x(const BiPoly& f, const BiPoly& d) {
  require(!d.is_zero(), Errc::DivisionByZero, "division by zero in F[y][x]");
  require(d.is_monic_x(), Errc::NotMonic, "divrem_x needs a divisor monic in x");
  Field fd = f.field();
  if (f.is_zero() || f.deg_x() < d.deg_x()) return {BiPoly::zero(fd), f};
  std::vector<UniPoly> rem = f.rows();
  int dd = d.deg_x();
  std::vector<UniPoly> q(f.deg_x() - dd + 1, UniPoly::zero(fd));
  for (int i = f.deg_x(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    UniPoly c = rem[i];
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - c * d.rows()[j];
  }
  return {BiPoly(fd, std::move(q)), BiPoly(fd, std::move(rem))};
}

}  // namespace polydec
