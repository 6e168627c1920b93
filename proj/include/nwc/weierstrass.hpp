#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nwc/divisor.hpp"
#include "nwc/function.hpp"
#include "nwc/riemann_roch.hpp"

namespace nwc {

class SemigroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cofinite submonoid of the nonnegative integers.
class NumericalSemigroup {
 public:
  /// From membership flags for 0..limit. The flags are accepted only if they
  /// provably stabilize: the run of members after the largest gap must be at
  /// least as long as the smallest positive member. Throws SemigroupError.
  static NumericalSemigroup from_bitmap(std::vector<bool> member);
  /// Semigroup generated by the given positive integers (gcd must be 1).
  static NumericalSemigroup generated_by(std::span<const int> generators);

  bool contains(int s) const;
  int conductor() const { return conductor_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  const std::vector<int>& gaps() const { return gaps_; }
  int multiplicity() const { return multiplicity_; }
  /// Minimal generating set.
  std::vector<int> generators() const;
  std::vector<int> elements_upto(int n) const;
  /// "<g1,g2,...>".
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  NumericalSemigroup() = default;
  std::vector<int> gaps_;
  int conductor_ = 0;
  int multiplicity_ = 1;
};

/// Multi-point Weierstrass semigroup of (Q_1, ..., Q_m): pole-order vectors
/// of the functions regular away from the Q_k.
///
/// Membership uses dimensions only: a is a member iff dim L(a) > dim L(a - e_i)
/// for every i with a_i > 0. This is exact as long as m is smaller than the
/// field size, since L(a) is then not a union of the m subspaces L(a - e_i).
/// Results are cached in write-once maps behind a mutex.
class MultiPointSemigroup {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20240601;
  static constexpr int kWitnessRetries = 64;

  explicit MultiPointSemigroup(const RiemannRoch& rr, std::uint64_t seed = kDefaultSeed);

  const RiemannRoch& rr() const { return *rr_; }
  std::size_t m() const { return rr_->m(); }
  std::uint64_t seed() const { return seed_; }

  bool contains(const DivisorVector& a) const;
  /// Function f with rho(f) = a, or empty when a is not a member. Single
  /// basis elements are tried first, then seeded random combinations; more
  /// than kWitnessRetries failures throws SemigroupError.
  std::optional<FunctionElement> witness(const DivisorVector& a) const;

  /// Axis semigroup at Q_k from memberships of s·e_k, s <= limit.
  NumericalSemigroup one_point_semigroup(std::size_t k, int limit) const;
  /// Same with limit 4g + 2, cached.
  const NumericalSemigroup& one_point(std::size_t k) const;

  /// a is a member and no other member c <= a has c_k = a_k.
  bool is_fiber_minimal(const DivisorVector& a, std::size_t k) const;
  /// Fiber-minimal for every k with a_k > 0 (the zero vector counts).
  bool is_minimal(const DivisorVector& a) const;
  /// All minimals c <= box.
  std::vector<DivisorVector> minimals(const DivisorVector& box) const;
  /// Minimals with at least two nonzero entries, searched in the product of
  /// the sets {0} ∪ gaps(S_k). Sorted lexicographically; cached.
  const std::vector<DivisorVector>& gamma_tilde() const;
  /// For each k with a_k > 0, a fiber-minimal b <= a with b_k = a_k (least
  /// degree, then lexicographic). Duplicates are dropped; the lub is a.
  /// Throws SemigroupError if a is not a member.
  std::vector<DivisorVector> lub_decompose(const DivisorVector& a) const;

 private:
  std::optional<DivisorVector> fiber_minimal_below(const DivisorVector& a, std::size_t k) const;

  const RiemannRoch* rr_;
  std::uint64_t seed_;

  mutable std::mutex mutex_;
  mutable std::map<DivisorVector, bool> members_;
  mutable std::map<std::size_t, std::unique_ptr<NumericalSemigroup>> axis_;
  mutable std::unique_ptr<std::vector<DivisorVector>> gamma_tilde_;
};

}  // namespace nwc
