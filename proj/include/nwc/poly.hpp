#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nwc/finite_field.hpp"

namespace nwc {

/// Truncated power series c_0 + c_1 t + ... + c_{T-1} t^{T-1}.
class PowerSeries {
 public:
  PowerSeries(const GaloisField& field, std::size_t precision);

  static PowerSeries constant(const GaloisField& field, Elem c, std::size_t precision);
  /// c t^k (zero when k >= precision).
  static PowerSeries monomial(const GaloisField& field, Elem c, std::size_t k, std::size_t precision);

  const GaloisField& field() const { return *field_; }
  std::size_t precision() const { return coeffs_.size(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
  void set(std::size_t i, Elem c) { coeffs_.at(i) = c; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, empty if every stored one is 0.
  std::optional<std::size_t> order() const;
  PowerSeries truncated(std::size_t precision) const;
  PowerSeries scaled(Elem c) const;
  /// Multiplication by t^k.
  PowerSeries shifted(std::size_t k) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;

  // Binary operations truncate to the smaller precision.
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  const GaloisField* field_;
  std::vector<Elem> coeffs_;
};

struct Monomial {
  int x = 0;
  int y = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse polynomial in x, y over a GaloisField. Only nonzero terms are stored.
class BivariatePoly {
 public:
  explicit BivariatePoly(const GaloisField& field) : field_(&field) {}

  static BivariatePoly constant(const GaloisField& field, Elem c);
  static BivariatePoly monomial(const GaloisField& field, Monomial m, Elem c = 1);

  const GaloisField& field() const { return *field_; }
  const std::map<Monomial, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Elem coeff(Monomial m) const;
  /// Adds c to the coefficient of m.
  void add_term(Monomial m, Elem c);

  int max_x_degree() const;
  int max_y_degree() const;
  int total_degree() const;
  /// Largest k with x^k dividing the polynomial; 0 for the zero polynomial.
  int x_adic_order() const;

  BivariatePoly scaled(Elem c) const;
  /// Multiplication by x^k y^l.
  BivariatePoly shifted(int kx, int ly) const;
  /// Division by x^k; requires x^k to divide the polynomial.
  BivariatePoly divided_by_x(int k) const;

  BivariatePoly derivative_x() const;
  BivariatePoly derivative_y() const;

  Elem evaluate(Elem x, Elem y) const;
  /// h(X(t), Y(t)) truncated to the smaller of the two precisions.
  PowerSeries substitute(const PowerSeries& x, const PowerSeries& y) const;

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);

 private:
  const GaloisField* field_;
  std::map<Monomial, Elem> terms_;
};

}  // namespace nwc
