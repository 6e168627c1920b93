#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "nwc/finite_field.hpp"
#include "nwc/poly.hpp"

namespace nwc {

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RationalPlace {
  enum class Kind { Affine, Infinite };

  Kind kind = Kind::Affine;
  Elem x = 0;
  Elem y = 0;
  /// Position in CurveModel::places().
  std::size_t index = 0;

  bool is_affine() const { return kind == Kind::Affine; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  friend bool operator==(const RationalPlace& a, const RationalPlace& b) {
    return a.kind == b.kind && a.x == b.x && a.y == b.y;
  }
};

enum class Uniformizer { XShift, YShift };

/// Local parametrization (X(t), Y(t)) of the curve at an affine place. The
/// uniformizing coordinate is exactly x0 + t (or y0 + t); the other one is
/// the lifted series.
struct BranchExpansion {
  RationalPlace place;
  Uniformizer uniformizer = Uniformizer::XShift;
  PowerSeries x;
  PowerSeries y;

  std::size_t precision() const { return x.precision(); }
  const PowerSeries& dependent() const { return uniformizer == Uniformizer::XShift ? y : x; }
};

/// Discrete valuation value: an integer or +infinity (valuation of zero).
class Valuation {
 public:
  Valuation(int v) : value_(v) {}  // NOLINT: implicit from int is intended
  static Valuation infinity() {
    Valuation v(0);
    v.infinite_ = true;
    return v;
  }
  bool is_infinite() const { return infinite_; }
  int value() const {
    if (infinite_) throw CurveError("valuation is +infinity");
    return value_;
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  int value_;
  bool infinite_ = false;
};

/// Smooth plane curve F(x, y) = 0 with a single place at infinity.
///
/// Affine valuations come from branch expansions; the infinite place is
/// handled by the concrete model. Branches are cached per place and grow on
/// demand under a mutex, so concurrent readers only ever see complete
/// expansions.
class CurveModel {
 public:
  virtual ~CurveModel() = default;

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const BivariatePoly& equation() const { return equation_; }
  int degree() const { return equation_.total_degree(); }

  virtual int genus() const = 0;
  /// Normal form of h modulo the curve equation.
  virtual BivariatePoly reduce(const BivariatePoly& h) const = 0;
  /// Valuation at the infinite place of a nonzero reduced polynomial.
  virtual int valuation_at_infinity(const BivariatePoly& reduced) const = 0;

  /// Affine places in (x-coeffs, y-coeffs) order, then the infinite place.
  const std::vector<RationalPlace>& places() const { return places_; }
  const RationalPlace& infinite_place() const { return places_.back(); }
  /// Affine places with the given x-coordinate, in place order.
  std::vector<RationalPlace> places_with_x(Elem x) const;

  /// Expansion at an affine place with at least the requested precision.
  /// The returned object may carry more coefficients than asked for.
  std::shared_ptr<const BranchExpansion> branch(const RationalPlace& place, std::size_t precision) const;
  /// Fresh expansion, bypassing the cache.
  BranchExpansion expand(const RationalPlace& place, std::size_t precision) const;
  /// Builds every affine branch up to the given precision.
  void precompute(std::size_t precision) const;

  /// Order of vanishing of a polynomial at a place. Precision starts small
  /// and doubles up to the intersection-multiplicity cap deg(h)·deg(F);
  /// reaching it means h vanishes on the curve and +infinity is returned.
  Valuation polynomial_valuation(const RationalPlace& place, const BivariatePoly& h) const;

 protected:
  CurveModel(FieldPtr field, BivariatePoly equation);
  /// Exhaustive search over field pairs; checks smoothness at every point.
  void enumerate_places();

 private:
  FieldPtr field_;
  BivariatePoly equation_;
  BivariatePoly dfdx_;
  BivariatePoly dfdy_;
  std::vector<RationalPlace> places_;

  mutable std::mutex branch_mutex_;
  mutable std::map<std::size_t, std::shared_ptr<const BranchExpansion>> branches_;
};

/// y^q + y = x^(q+1) over GF(q^2).
class HermitianCurve final : public CurveModel {
 public:
  /// Builds the curve over the given field, or over the default GF(q^2) when
  /// field is null. Throws CurveError if the field order is not q^2.
  static std::shared_ptr<const HermitianCurve> make(int q, FieldPtr field = nullptr);

  int q() const { return q_; }
  int genus() const override { return q_ * (q_ - 1) / 2; }
  /// Replaces y^q by x^(q+1) - y until the y-degree is below q.
  BivariatePoly reduce(const BivariatePoly& h) const override;
  int valuation_at_infinity(const BivariatePoly& reduced) const override;

  /// Pole order q·i + (q+1)·j of x^i y^j at infinity.
  int weight(Monomial m) const { return q_ * m.x + (q_ + 1) * m.y; }
  /// The q affine places with x = 0.
  const std::vector<RationalPlace>& x_zero_places() const { return x_zero_; }

 private:
  HermitianCurve(int q, FieldPtr field);

  int q_;
  std::vector<RationalPlace> x_zero_;
};

using CurvePtr = std::shared_ptr<const HermitianCurve>;

}  // namespace nwc
