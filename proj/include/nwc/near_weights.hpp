#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nwc/function.hpp"
#include "nwc/riemann_roch.hpp"
#include "nwc/weierstrass.hpp"

namespace nwc {

class NearWeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value of a near weight: a nonnegative integer or the marker for rho(0).
/// Ordering puts the marker below every integer; arithmetic on it throws.
class RhoValue {
 public:
  explicit RhoValue(int v);
  static RhoValue neg_infinity();

  bool is_neg_infinity() const { return neg_inf_; }
  int value() const;
  std::string to_string() const;

  friend RhoValue operator+(const RhoValue& a, const RhoValue& b);
  friend bool operator==(const RhoValue&, const RhoValue&) = default;
  friend std::strong_ordering operator<=>(const RhoValue& a, const RhoValue& b);

 private:
  RhoValue() = default;
  int v_ = 0;
  bool neg_inf_ = false;
};

/// f ↦ max(0, -v_k(f)) for the valuation at Q_k, with 0 ↦ marker.
class NearWeight {
 public:
  NearWeight(const RiemannRoch& rr, std::size_t k);

  std::size_t index() const { return k_; }
  const RationalPlace& place() const { return rr_->points()[k_]; }

  /// Throws NotInRing when f is not regular away from Q_1..Q_m.
  RhoValue operator()(const FunctionElement& f) const;
  /// Same without the ring check.
  RhoValue unchecked(const FunctionElement& f) const;
  /// rho(f) <= rho(1).
  bool in_units(const FunctionElement& f) const;
  /// rho(f) > rho(1).
  bool in_m(const FunctionElement& f) const { return !in_units(f); }
  /// rho(g) - rho(g f) for an auxiliary g with g, g f of positive weight.
  int valuation_from_weights(const FunctionElement& f, const FunctionElement& g) const;

 private:
  const RiemannRoch* rr_;
  std::size_t k_;
};

struct CheckTally {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty() && checked > 0; }
};

struct AxiomReport {
  std::vector<CheckTally> checks;
  bool passed() const;
  const CheckTally& find(const std::string& name) const;
};

/// Samples pairs (f, g) and multipliers h from random L(a) combinations with
/// a drawn from the box [0, 2c - 1]^m, and checks every near-weight property
/// for each of the m weights. Half of the pairs share their divisor so that
/// equal-weight cases occur. Violations are collected, never thrown.
AxiomReport verify_axioms(const MultiPointSemigroup& semigroup, std::size_t pairs, std::uint64_t seed);

/// L(0) consists of constants and every axis semigroup has finite complement.
AxiomReport complete_set_check(const MultiPointSemigroup& semigroup);

}  // namespace nwc
