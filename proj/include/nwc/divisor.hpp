#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nwc {

/// Tuple (a_1, ..., a_m) of nonnegative integers with the componentwise
/// partial order. Used both for divisors a_1 Q_1 + ... + a_m Q_m and for
/// pole-order vectors.
class DivisorVector {
 public:
  DivisorVector() = default;
  explicit DivisorVector(std::size_t m) : v_(m, 0) {}
  DivisorVector(std::initializer_list<int> values);
  explicit DivisorVector(std::vector<int> values);

  /// k-th unit vector of length m.
  static DivisorVector unit(std::size_t m, std::size_t k);
  /// Parses "a1,a2,...". Throws std::invalid_argument.
  static DivisorVector parse(std::string_view text);

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  const std::vector<int>& values() const { return v_; }
  int degree() const;
  int max_entry() const;
  std::size_t support_size() const;

  /// Componentwise a <= b.
  bool leq(const DivisorVector& b) const;
  DivisorVector plus_unit(std::size_t k) const;
  DivisorVector minus_unit(std::size_t k) const;

  /// "a1,a2,...".
  std::string to_string() const;

  friend DivisorVector operator+(const DivisorVector& a, const DivisorVector& b);
  friend bool operator==(const DivisorVector&, const DivisorVector&) = default;
  /// Lexicographic; a total order for containers, unrelated to leq.
  friend auto operator<=>(const DivisorVector&, const DivisorVector&) = default;

 private:
  std::vector<int> v_;
};

/// Componentwise maximum. Throws std::invalid_argument on an empty list.
DivisorVector lub(std::span<const DivisorVector> items);
DivisorVector lub(const DivisorVector& a, const DivisorVector& b);

}  // namespace nwc
