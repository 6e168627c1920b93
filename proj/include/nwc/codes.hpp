#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nwc/divisor.hpp"
#include "nwc/finite_field.hpp"
#include "nwc/riemann_roch.hpp"

namespace nwc {

/// Image of L(a) under evaluation at n rational places off the support.
struct EvaluationCode {
  DivisorVector a;
  std::vector<RationalPlace> places;
  /// dim L(a) rows, one per basis function, n columns.
  FieldMatrix generator;
  std::size_t dimension = 0;

  std::size_t length() const { return places.size(); }
};

/// Every affine place that is not one of the chosen points.
std::vector<RationalPlace> default_eval_places(const RiemannRoch& rr);
/// Places by index into curve.places(). Throws std::invalid_argument for
/// out-of-range or repeated indices, the infinite place, or a chosen point.
std::vector<RationalPlace> select_eval_places(const RiemannRoch& rr, const std::vector<std::size_t>& indices);

EvaluationCode build_code(const RiemannRoch& rr, const DivisorVector& a, std::vector<RationalPlace> places);

struct DualDistance {
  /// Size of the smallest dependent column set, when at most the search limit.
  std::optional<int> distance;
  /// Column indices of one smallest dependent set.
  std::vector<std::size_t> witness;
  int searched_upto = 0;
};

/// Minimum distance of the dual code, i.e. the least number of linearly
/// dependent generator columns, searched over column subsets of size 1..wmax
/// in increasing size. Empty distance means it exceeds wmax.
DualDistance dual_min_distance_upto(const EvaluationCode& code, int wmax);

/// Ascends from a by unit steps, cycling through the coordinates, until the
/// evaluation map onto the given places is surjective; returns that divisor.
DivisorVector dim_jump_full_rank(const RiemannRoch& rr, const DivisorVector& a,
                                 const std::vector<RationalPlace>& places);

}  // namespace nwc
