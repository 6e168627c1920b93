#include "nwc/poly.hpp"

#include <algorithm>

namespace nwc {
namespace {

void check_same(const GaloisField& a, const GaloisField& b) {
  if (!a.same_as(b)) throw FieldError("operands belong to different fields");
}

}  // namespace

PowerSeries::PowerSeries(const GaloisField& field, std::size_t precision)
    : field_(&field), coeffs_(precision, 0) {}

PowerSeries PowerSeries::constant(const GaloisField& field, Elem c, std::size_t precision) {
  return monomial(field, c, 0, precision);
}

PowerSeries PowerSeries::monomial(const GaloisField& field, Elem c, std::size_t k, std::size_t precision) {
  PowerSeries s(field, precision);
  if (k < precision) s.coeffs_[k] = c;
  return s;
}

std::optional<std::size_t> PowerSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

PowerSeries PowerSeries::truncated(std::size_t precision) const {
  PowerSeries s(*field_, precision);
  const std::size_t n = std::min(precision, coeffs_.size());
  std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
  return s;
}

PowerSeries PowerSeries::scaled(Elem c) const {
  PowerSeries s(*field_, coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = field_->mul(c, coeffs_[i]);
  return s;
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  PowerSeries s(*field_, coeffs_.size());
  for (std::size_t i = 0; i + k < coeffs_.size(); ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  check_same(*a.field_, *b.field_);
  PowerSeries s(*a.field_, std::min(a.precision(), b.precision()));
  for (std::size_t i = 0; i < s.precision(); ++i) s.coeffs_[i] = a.field_->add(a.coeffs_[i], b.coeffs_[i]);
  return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  check_same(*a.field_, *b.field_);
  PowerSeries s(*a.field_, std::min(a.precision(), b.precision()));
  for (std::size_t i = 0; i < s.precision(); ++i) s.coeffs_[i] = a.field_->sub(a.coeffs_[i], b.coeffs_[i]);
  return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_same(*a.field_, *b.field_);
  const GaloisField& f = *a.field_;
  const std::size_t n = std::min(a.precision(), b.precision());
  PowerSeries s(f, n);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < n; ++j)
    if (b.coeffs_[j] != 0) nz.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j : nz) {
      if (i + j >= n) break;
      s.coeffs_[i + j] = f.add(s.coeffs_[i + j], f.mul(ai, b.coeffs_[j]));
    }
  }
  return s;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_.empty() || coeffs_[0] == 0) throw FieldError("power series with zero constant term is not invertible");
  const GaloisField& f = *field_;
  const std::size_t n = coeffs_.size();
  PowerSeries r(f, n);
  const Elem c0inv = f.inv(coeffs_[0]);
  r.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    Elem acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc = f.add(acc, f.mul(coeffs_[i], r.coeffs_[k - i]));
    r.coeffs_[k] = f.neg(f.mul(acc, c0inv));
  }
  return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------

BivariatePoly BivariatePoly::constant(const GaloisField& field, Elem c) {
  return monomial(field, {0, 0}, c);
}

BivariatePoly BivariatePoly::monomial(const GaloisField& field, Monomial m, Elem c) {
  BivariatePoly p(field);
  p.add_term(m, c);
  return p;
}

Elem BivariatePoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Elem{0} : it->second;
}

void BivariatePoly::add_term(Monomial m, Elem c) {
  if (m.x < 0 || m.y < 0) throw FieldError("negative exponent in polynomial term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int BivariatePoly::max_x_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

int BivariatePoly::max_y_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y);
  return d;
}

int BivariatePoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x + m.y);
  return d;
}

int BivariatePoly::x_adic_order() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.x;
  for (const auto& [m, c] : terms_) d = std::min(d, m.x);
  return d;
}

BivariatePoly BivariatePoly::scaled(Elem c) const {
  BivariatePoly p(*field_);
  if (c == 0) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, field_->mul(c, v));
  return p;
}

BivariatePoly BivariatePoly::shifted(int kx, int ly) const {
  BivariatePoly p(*field_);
  for (const auto& [m, v] : terms_) p.terms_.emplace(Monomial{m.x + kx, m.y + ly}, v);
  return p;
}

BivariatePoly BivariatePoly::divided_by_x(int k) const {
  if (k > x_adic_order() && !is_zero()) throw FieldError("polynomial not divisible by the requested power of x");
  return shifted(-k, 0);
}

BivariatePoly BivariatePoly::derivative_x() const {
  BivariatePoly p(*field_);
  for (const auto& [m, c] : terms_)
    if (m.x > 0) p.add_term({m.x - 1, m.y}, field_->mul(field_->from_int(m.x), c));
  return p;
}

BivariatePoly BivariatePoly::derivative_y() const {
  BivariatePoly p(*field_);
  for (const auto& [m, c] : terms_)
    if (m.y > 0) p.add_term({m.x, m.y - 1}, field_->mul(field_->from_int(m.y), c));
  return p;
}

Elem BivariatePoly::evaluate(Elem x, Elem y) const {
  Elem acc = 0;
  for (const auto& [m, c] : terms_)
    acc = field_->add(acc, field_->mul(c, field_->mul(field_->pow(x, m.x), field_->pow(y, m.y))));
  return acc;
}

PowerSeries BivariatePoly::substitute(const PowerSeries& x, const PowerSeries& y) const {
  check_same(*field_, x.field());
  const std::size_t n = std::min(x.precision(), y.precision());
  PowerSeries result(*field_, n);
  if (terms_.empty() || n == 0) return result;

  // Horner in y over the x-polynomials p_j(x), each evaluated by Horner in x.
  const int dy = max_y_degree();
  std::vector<std::vector<std::pair<int, Elem>>> by_y(dy + 1);
  for (const auto& [m, c] : terms_) by_y[m.y].emplace_back(m.x, c);
  const PowerSeries xs = x.truncated(n);
  const PowerSeries ys = y.truncated(n);

  for (int j = dy; j >= 0; --j) {
    PowerSeries pj(*field_, n);
    auto& row = by_y[j];
    if (!row.empty()) {
      std::sort(row.begin(), row.end());
      int deg = row.back().first;
      std::size_t idx = row.size();
      for (int i = deg; i >= 0; --i) {
        if (i != deg) pj = pj * xs;
        if (idx > 0 && row[idx - 1].first == i) {
          pj.set(0, field_->add(pj.coeff(0), row[idx - 1].second));
          --idx;
        }
      }
    }
    result = (j == dy) ? pj : result * ys + pj;
  }
  return result;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  check_same(*a.field_, *b.field_);
  BivariatePoly p = a;
  for (const auto& [m, c] : b.terms_) p.add_term(m, c);
  return p;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  check_same(*a.field_, *b.field_);
  BivariatePoly p = a;
  for (const auto& [m, c] : b.terms_) p.add_term(m, a.field_->neg(c));
  return p;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  check_same(*a.field_, *b.field_);
  BivariatePoly p(*a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term({ma.x + mb.x, ma.y + mb.y}, a.field_->mul(ca, cb));
  return p;
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
  return a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
}

}  // namespace nwc
