#include "nwc/function.hpp"

#include <algorithm>

namespace nwc {
namespace {

const CurveModel& common_curve(const FunctionElement& a, const FunctionElement& b) {
  if (&a.curve() != &b.curve()) throw CurveError("functions live on different curves");
  return a.curve();
}

}  // namespace

FunctionElement::FunctionElement(const CurveModel& curve, BivariatePoly numerator, int denom_exp)
    : curve_(&curve), num_(curve.reduce(numerator)), den_(denom_exp) {
  if (den_ < 0) throw CurveError("negative denominator exponent");
  if (!num_.field().same_as(curve.field())) throw FieldError("numerator is over a different field");
  if (num_.is_zero()) {
    den_ = 0;
    return;
  }
  // Reduction only rewrites y^q, which keeps divisibility by x intact, so
  // cancelling on the reduced form is exact.
  const int k = std::min(den_, num_.x_adic_order());
  if (k > 0) {
    num_ = num_.divided_by_x(k);
    den_ -= k;
  }
}

FunctionElement FunctionElement::constant(const CurveModel& curve, Elem c) {
  return FunctionElement(curve, BivariatePoly::constant(curve.field(), c), 0);
}

FunctionElement FunctionElement::scaled(Elem c) const { return FunctionElement(*curve_, num_.scaled(c), den_); }

Valuation FunctionElement::valuation(const RationalPlace& place) const {
  if (is_zero()) throw CurveError("valuation of the zero function");
  const Valuation vh = curve_->polynomial_valuation(place, num_);
  if (vh.is_infinite()) throw CurveError("numerator vanishes on the curve");
  if (den_ == 0) return vh;
  const BivariatePoly x = BivariatePoly::monomial(curve_->field(), {1, 0});
  return vh.value() - den_ * curve_->polynomial_valuation(place, x).value();
}

Elem FunctionElement::value_at(const RationalPlace& place) const {
  if (is_zero()) return 0;
  const Valuation v = valuation(place);
  if (v.value() < 0) throw CurveError("function has a pole at place " + std::to_string(place.index));
  if (v.value() > 0) return 0;
  if (place.is_infinite()) throw CurveError("evaluation at the infinite place is not supported");
  const GaloisField& f = curve_->field();
  if (place.x != 0) return f.div(num_.evaluate(place.x, place.y), f.pow(place.x, den_));
  // On x = 0 both numerator and x^N vanish to the same order; the value is
  // the ratio of their leading series coefficients.
  const int vx = curve_->polynomial_valuation(place, BivariatePoly::monomial(f, {1, 0})).value();
  const std::size_t k = static_cast<std::size_t>(den_ * vx);
  const auto b = curve_->branch(place, k + 1);
  const PowerSeries hs = num_.substitute(b->x.truncated(k + 1), b->y.truncated(k + 1));
  const PowerSeries xs = BivariatePoly::monomial(f, {den_, 0}).substitute(b->x.truncated(k + 1), b->y.truncated(k + 1));
  return f.div(hs.coeff(k), xs.coeff(k));
}

std::string FunctionElement::to_string() const {
  if (is_zero()) return "0";
  const GaloisField& f = curve_->field();
  std::string out;
  for (const auto& [m, c] : num_.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + f.format(c) + ")*x^" + std::to_string(m.x) + "*y^" + std::to_string(m.y);
  }
  out += " / x^" + std::to_string(den_);
  return out;
}

FunctionElement operator+(const FunctionElement& a, const FunctionElement& b) {
  const CurveModel& c = common_curve(a, b);
  const int n = std::max(a.den_, b.den_);
  return FunctionElement(c, a.num_.shifted(n - a.den_, 0) + b.num_.shifted(n - b.den_, 0), n);
}

FunctionElement operator-(const FunctionElement& a, const FunctionElement& b) {
  const CurveModel& c = common_curve(a, b);
  const int n = std::max(a.den_, b.den_);
  return FunctionElement(c, a.num_.shifted(n - a.den_, 0) - b.num_.shifted(n - b.den_, 0), n);
}

FunctionElement operator*(const FunctionElement& a, const FunctionElement& b) {
  const CurveModel& c = common_curve(a, b);
  return FunctionElement(c, a.num_ * b.num_, a.den_ + b.den_);
}

bool operator==(const FunctionElement& a, const FunctionElement& b) {
  return a.curve_ == b.curve_ && a.den_ == b.den_ && a.num_ == b.num_;
}

}  // namespace nwc
