#pragma once

#include <string>

#include "nwc/curve.hpp"
#include "nwc/poly.hpp"

namespace nwc {

/// Rational function h / x^N on a curve.
///
/// Kept in canonical form: h is reduced modulo the curve equation, and when
/// N > 0 the numerator is not divisible by x. Zero is stored with N = 0.
class FunctionElement {
 public:
  FunctionElement(const CurveModel& curve, BivariatePoly numerator, int denom_exp = 0);

  static FunctionElement constant(const CurveModel& curve, Elem c);
  static FunctionElement zero(const CurveModel& curve) { return constant(curve, 0); }

  const CurveModel& curve() const { return *curve_; }
  const BivariatePoly& numerator() const { return num_; }
  int denom_exp() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FunctionElement scaled(Elem c) const;

  /// Throws CurveError for the zero function.
  Valuation valuation(const RationalPlace& place) const;
  /// Value at a place where the function has no pole; throws CurveError at a pole.
  Elem value_at(const RationalPlace& place) const;

  /// "c*x^i*y^j + ... / x^N" with coefficients in field text syntax.
  std::string to_string() const;

  friend FunctionElement operator+(const FunctionElement& a, const FunctionElement& b);
  friend FunctionElement operator-(const FunctionElement& a, const FunctionElement& b);
  friend FunctionElement operator*(const FunctionElement& a, const FunctionElement& b);
  friend bool operator==(const FunctionElement& a, const FunctionElement& b);

 private:
  const CurveModel* curve_;
  BivariatePoly num_;
  int den_;
};

}  // namespace nwc
