#include "nwc/curve.hpp"

#include <algorithm>

namespace nwc {

CurveModel::CurveModel(FieldPtr field, BivariatePoly equation)
    : field_(std::move(field)),
      equation_(std::move(equation)),
      dfdx_(equation_.derivative_x()),
      dfdy_(equation_.derivative_y()) {}

void CurveModel::enumerate_places() {
  places_.clear();
  const auto& elems = field_->elements();
  for (Elem x : elems) {
    for (Elem y : elems) {
      if (equation_.evaluate(x, y) != 0) continue;
      if (dfdx_.evaluate(x, y) == 0 && dfdy_.evaluate(x, y) == 0)
        throw CurveError("singular point (" + field_->format(x) + ";" + field_->format(y) + ")");
      places_.push_back({RationalPlace::Kind::Affine, x, y, places_.size()});
    }
  }
  places_.push_back({RationalPlace::Kind::Infinite, 0, 0, places_.size()});
}

std::vector<RationalPlace> CurveModel::places_with_x(Elem x) const {
  std::vector<RationalPlace> out;
  for (const auto& p : places_)
    if (p.is_affine() && p.x == x) out.push_back(p);
  return out;
}

BranchExpansion CurveModel::expand(const RationalPlace& place, std::size_t precision) const {
  if (!place.is_affine()) throw CurveError("branch expansion requested at the infinite place");
  if (precision == 0) throw CurveError("branch precision must be >= 1");
  const GaloisField& f = *field_;
  const bool by_x = dfdy_.evaluate(place.x, place.y) != 0;
  if (!by_x && dfdx_.evaluate(place.x, place.y) == 0) throw CurveError("cannot expand at a singular point");

  // The uniformizing coordinate is c0 + t; Newton iteration lifts the other
  // one, doubling the number of correct coefficients per round.
  const Elem c0 = by_x ? place.x : place.y;
  const Elem d0 = by_x ? place.y : place.x;
  const BivariatePoly& deriv = by_x ? dfdy_ : dfdx_;
  auto uniform = [&](std::size_t n) {
    PowerSeries s = PowerSeries::constant(f, c0, n);
    if (n > 1) s.set(1, 1);
    return s;
  };
  PowerSeries dep = PowerSeries::constant(f, d0, 1);
  std::size_t cur = 1;
  while (cur < precision) {
    cur = std::min(2 * cur, precision);
    const PowerSeries u = uniform(cur);
    const PowerSeries d = dep.truncated(cur);
    const PowerSeries& xs = by_x ? u : d;
    const PowerSeries& ys = by_x ? d : u;
    const PowerSeries value = equation_.substitute(xs, ys);
    const PowerSeries slope = deriv.substitute(xs, ys);
    dep = d - value * slope.inverse();
  }
  dep = dep.truncated(precision);

  BranchExpansion b{place, by_x ? Uniformizer::XShift : Uniformizer::YShift,
                    by_x ? uniform(precision) : dep, by_x ? dep : uniform(precision)};
  if (equation_.substitute(b.x, b.y).order().has_value())
    throw CurveError("branch lift failed to satisfy the curve equation");
  return b;
}

std::shared_ptr<const BranchExpansion> CurveModel::branch(const RationalPlace& place, std::size_t precision) const {
  std::lock_guard<std::mutex> lock(branch_mutex_);
  auto it = branches_.find(place.index);
  if (it != branches_.end() && it->second->precision() >= precision) return it->second;
  std::size_t target = precision;
  if (it != branches_.end()) target = std::max(target, 2 * it->second->precision());
  auto b = std::make_shared<const BranchExpansion>(expand(place, target));
  branches_[place.index] = b;
  return b;
}

void CurveModel::precompute(std::size_t precision) const {
  for (const auto& p : places_)
    if (p.is_affine()) branch(p, precision);
}

Valuation CurveModel::polynomial_valuation(const RationalPlace& place, const BivariatePoly& h) const {
  if (place.is_infinite()) {
    const BivariatePoly r = reduce(h);
    if (r.is_zero()) return Valuation::infinity();
    return valuation_at_infinity(r);
  }
  if (h.is_zero()) return Valuation::infinity();
  const std::size_t cap = static_cast<std::size_t>(std::max(1, h.total_degree()) * degree()) + 1;
  std::size_t t = std::min<std::size_t>(cap, 16);
  while (true) {
    const auto b = branch(place, t);
    const PowerSeries s = h.substitute(b->x.truncated(t), b->y.truncated(t));
    if (auto o = s.order()) return static_cast<int>(*o);
    if (t >= cap) return Valuation::infinity();
    t = std::min(2 * t, cap);
  }
}

// ---------------------------------------------------------------------------

namespace {

BivariatePoly hermitian_equation(const GaloisField& f, int q) {
  // x^(q+1) - y^q - y
  BivariatePoly e(f);
  e.add_term({q + 1, 0}, 1);
  e.add_term({0, q}, f.neg(1));
  e.add_term({0, 1}, f.neg(1));
  return e;
}

}  // namespace

std::shared_ptr<const HermitianCurve> HermitianCurve::make(int q, FieldPtr field) {
  if (q < 2) throw CurveError("curve parameter q must be a prime power >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  for (int r = q; r > 1; r /= p) {
    if (r % p != 0) throw CurveError("curve parameter q=" + std::to_string(q) + " is not a prime power");
    ++e;
  }
  if (!field) {
    field = GaloisField::make(p, 2 * e);
  } else if (field->order() != q * q) {
    throw CurveError("field of order " + std::to_string(field->order()) + " does not match curve q=" +
                     std::to_string(q) + " (needs order " + std::to_string(q * q) + ")");
  }
  return std::shared_ptr<const HermitianCurve>(new HermitianCurve(q, std::move(field)));
}

HermitianCurve::HermitianCurve(int q, FieldPtr field) : CurveModel(field, hermitian_equation(*field, q)), q_(q) {
  enumerate_places();
  const std::size_t expected = static_cast<std::size_t>(q) * q * q + 1;
  if (places().size() != expected)
    throw CurveError("expected " + std::to_string(expected) + " rational places, found " +
                     std::to_string(places().size()));
  x_zero_ = places_with_x(0);
}

BivariatePoly HermitianCurve::reduce(const BivariatePoly& h) const {
  const GaloisField& f = field();
  BivariatePoly r = h;
  while (r.max_y_degree() >= q_) {
    BivariatePoly next(f);
    for (const auto& [m, c] : r.terms()) {
      if (m.y < q_) {
        next.add_term(m, c);
      } else {
        next.add_term({m.x + q_ + 1, m.y - q_}, c);
        next.add_term({m.x, m.y - q_ + 1}, f.neg(c));
      }
    }
    r = std::move(next);
  }
  return r;
}

int HermitianCurve::valuation_at_infinity(const BivariatePoly& reduced) const {
  if (reduced.is_zero()) throw CurveError("valuation of zero at infinity");
  // Weights of reduced monomials are pairwise distinct, so the heaviest term
  // alone fixes the pole order.
  int w = 0;
  for (const auto& [m, c] : reduced.terms()) {
    if (m.y >= q_) throw CurveError("polynomial is not reduced");
    w = std::max(w, weight(m));
  }
  return -w;
}

}  // namespace nwc
