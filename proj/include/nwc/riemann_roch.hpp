#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "nwc/curve.hpp"
#include "nwc/divisor.hpp"
#include "nwc/function.hpp"

namespace nwc {

/// A function has a pole outside the chosen points.
class NotInRing : public std::runtime_error {
 public:
  NotInRing(const std::string& what, std::size_t place_index)
      : std::runtime_error(what), place_index_(place_index) {}
  std::size_t place_index() const { return place_index_; }

 private:
  std::size_t place_index_;
};

struct RRBasis {
  DivisorVector divisor;
  std::vector<FunctionElement> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Spaces L(a_1 Q_1 + ... + a_m Q_m) on a Hermitian curve, where the Q_k are
/// chosen among the q places with x = 0.
///
/// Every element is written as h / x^N with N = max a_k and h spanned by the
/// monomials x^i y^j (j < q) of weight q·i + (q+1)·j <= q·N; the conditions
/// at the x = 0 places are linear in the coefficients of h. Bases and
/// dimensions are memoized behind a mutex; entries are never replaced.
class RiemannRoch {
 public:
  /// point_indices select Q_1..Q_m from the x = 0 places. Throws
  /// std::invalid_argument when an index is out of range or repeated, or
  /// when m is 0 or exceeds q.
  RiemannRoch(CurvePtr curve, std::vector<std::size_t> point_indices);

  const HermitianCurve& curve() const { return *curve_; }
  const CurvePtr& curve_ptr() const { return curve_; }
  const GaloisField& field() const { return curve_->field(); }
  std::size_t m() const { return points_.size(); }
  const std::vector<RationalPlace>& points() const { return points_; }
  const std::vector<std::size_t>& point_indices() const { return indices_; }
  bool is_point(const RationalPlace& p) const;

  /// Numerator monomials for denominator x^N, in increasing weight.
  std::vector<Monomial> candidates(int n) const;

  std::shared_ptr<const RRBasis> basis(const DivisorVector& a) const;
  std::size_t dim(const DivisorVector& a) const;

  /// Pole orders at Q_1..Q_m. Throws CurveError for zero and NotInRing when
  /// f has a pole at the infinite place or at an unchosen x = 0 place.
  DivisorVector rho(const FunctionElement& f) const;
  /// Pole order at Q_k alone; no ring check.
  int pole_order(std::size_t k, const FunctionElement& f) const;

 private:
  FieldMatrix constraints(const DivisorVector& a, const std::vector<Monomial>& cands) const;
  void check_size(const DivisorVector& a) const;

  CurvePtr curve_;
  std::vector<std::size_t> indices_;
  std::vector<RationalPlace> points_;
  /// Requirement slot of each x = 0 place: index into a, or -1 if unchosen.
  std::vector<int> slot_;

  mutable std::mutex mutex_;
  mutable std::map<DivisorVector, std::shared_ptr<const RRBasis>> bases_;
  mutable std::map<DivisorVector, std::size_t> dims_;
};

}  // namespace nwc
