#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nwc/divisor.hpp"
#include "nwc/function.hpp"
#include "nwc/weierstrass.hpp"

namespace nwc {

/// A computation needs tuples beyond the configured search box.
class BoxTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How the product condition between pairs is certified.
///  - Semigroup: u_s + v_r <= a componentwise, which suffices because pole
///    orders of a product never exceed the sum of the factors' pole orders.
///  - Exact: pole orders of the actual product of witness functions.
enum class CertifyMode { Semigroup, Exact };

struct ChainPair {
  DivisorVector u;
  DivisorVector v;
  /// Witnesses with rho(f) = u and rho(g) = v; filled in exact mode.
  std::optional<FunctionElement> f;
  std::optional<FunctionElement> g;
};

/// Pairs (u_i, v_i) of semigroup members for divisor a and coordinate k:
/// u_k + v_k = a_k + 1, u_k strictly increasing, u_i + v_i <= a + e_k, and
/// for s < r the product of the s-th first factor and r-th second factor
/// lies in L(a).
struct PairChain {
  std::size_t k = 0;
  DivisorVector a;
  CertifyMode mode = CertifyMode::Semigroup;
  std::vector<ChainPair> pairs;
  std::size_t size() const { return pairs.size(); }
};

struct PairCount {
  int formula = 0;
  int enumerated = 0;
  std::vector<std::pair<int, int>> pairs;
  bool agrees() const { return formula == enumerated; }
};

/// Pairs of nonzero members of s summing to 2c + u, counted by the closed
/// form 2(c - g) + u - 1 and by enumeration.
PairCount pair_count_formula(const NumericalSemigroup& s, int u);

/// a_0 = start, a_{i+1} = a_i + e_{steps[i]}.
struct Path {
  std::vector<DivisorVector> points;
  std::vector<std::size_t> steps;

  static Path from_steps(const DivisorVector& start, const std::vector<std::size_t>& steps);
  const DivisorVector& start() const { return points.front(); }
  const DivisorVector& end() const { return points.back(); }
  /// Throws std::invalid_argument unless consecutive points differ by one unit step.
  void validate() const;
  /// Step coordinates, 1-based, e.g. "1,1,2,3".
  std::string steps_string() const;
};

struct BoundReport {
  DivisorVector a;
  std::vector<int> nu;
  DivisorVector limits;
  Path path;
  std::vector<int> step_nu;
  int delta = 0;
  /// Index into path.steps of the first step attaining delta.
  std::size_t argmin = 0;
  int goppa = 0;
};

/// sum(a) - (2g - 2).
int goppa_bound(const DivisorVector& a, int genus);

/// Pair-chain bounds on top of a multi-point semigroup.
///
/// Candidates at level t for coordinate k are the fiber-minimal members w
/// with w_k = t below the bound: t·e_k when t is in the axis semigroup S_k,
/// otherwise the elements of Γ̃ (minimals with two or more nonzero entries)
/// with k-th entry t. Shrinking a pair entry only relaxes every chain
/// condition, so restricting to minimals loses nothing. The maximum chain
/// is found by depth-first branch-and-bound; the first maximum in the order
/// "take candidate pairs in lexicographic order, then skip the level" wins.
class BoundEngine {
 public:
  /// An optional box limits every tuple the search may touch.
  explicit BoundEngine(const MultiPointSemigroup& semigroup, std::optional<DivisorVector> box = std::nullopt);

  const MultiPointSemigroup& semigroup() const { return *h_; }

  std::vector<DivisorVector> candidates(std::size_t k, int t, const DivisorVector& bound) const;

  /// Maximum pair chain for (a, k); its size is the bound value.
  PairChain nu(const DivisorVector& a, std::size_t k, CertifyMode mode = CertifyMode::Semigroup) const;
  int nu_value(const DivisorVector& a, std::size_t k, CertifyMode mode = CertifyMode::Semigroup) const;
  std::vector<int> nu_vector(const DivisorVector& a, CertifyMode mode = CertifyMode::Semigroup) const;

  /// Per k: 2c_k + u - 1 with u = nu_k - 2(c_k - g_k) + 1 when nu_k exceeds
  /// 2(c_k - g_k) - 1, else 2c_k - 1.
  DivisorVector truncation_limits(const DivisorVector& a, CertifyMode mode = CertifyMode::Semigroup) const;
  /// Raise coordinate 1 to its limit, then coordinate 2, and so on.
  /// Coordinates already at or above their limit are left alone.
  Path default_path(const DivisorVector& a, const DivisorVector& limits) const;

  BoundReport delta_bound(const DivisorVector& a, CertifyMode mode = CertifyMode::Semigroup) const;
  /// Path must start at a and end at lub(a, limits). Throws std::invalid_argument.
  BoundReport delta_bound(const DivisorVector& a, const Path& path, CertifyMode mode = CertifyMode::Semigroup) const;
  /// Best min over all unit-step paths from a to lub(a, limits), by dynamic
  /// programming over the box; ties prefer the lower coordinate.
  BoundReport delta_bound_search(const DivisorVector& a, CertifyMode mode = CertifyMode::Semigroup) const;

  /// Problems with a chain (empty when valid). Exact mode multiplies the
  /// witnesses; semigroup mode uses the componentwise sums.
  std::vector<std::string> verify_chain(const PairChain& chain, CertifyMode mode) const;

 private:
  void check_box(const DivisorVector& t) const;
  DivisorVector product_rho(const DivisorVector& u, const DivisorVector& v) const;
  const FunctionElement& witness(const DivisorVector& u) const;
  PairChain search(const DivisorVector& a, std::size_t k, CertifyMode mode) const;

  const MultiPointSemigroup* h_;
  std::optional<DivisorVector> box_;

  mutable std::mutex mutex_;
  mutable std::map<std::tuple<DivisorVector, std::size_t, CertifyMode>, PairChain> chains_;
  mutable std::map<DivisorVector, FunctionElement> witnesses_;
  mutable std::map<std::pair<DivisorVector, DivisorVector>, DivisorVector> products_;
};

}  // namespace nwc
