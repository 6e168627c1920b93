#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nwc {

/// Internal element code. For GF(p^e) the code of c0 + c1 t + ... + c_{e-1} t^{e-1}
/// is c0 + c1 p + ... + c_{e-1} p^{e-1}; zero is 0 and one is 1.
using Elem = std::uint16_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// GF(p^e) with a fixed monic irreducible modulus.
///
/// Arithmetic goes through precomputed tables, so every operation is a lookup.
/// Instances are immutable once built and are shared through shared_ptr; the
/// hot paths of the library work on raw Elem codes against a field reference.
class GaloisField {
 public:
  /// Builds GF(p^e). An empty modulus selects the default one (see
  /// default_modulus). Throws FieldError if p is not prime, the order exceeds
  /// kMaxOrder, or the modulus is not monic irreducible of degree e.
  static std::shared_ptr<const GaloisField> make(int p, int e, std::vector<int> modulus = {});

  static constexpr int kMaxOrder = 1024;

  /// First monic irreducible polynomial of degree e in the order of the
  /// integer code of its lower coefficients; gives t^2+1 for GF(9) and
  /// t^4+t+1 for GF(16).
  static std::vector<int> default_modulus(int p, int e);
  /// Trial division by every monic polynomial of degree 1..deg/2.
  static bool is_irreducible(int p, std::span<const int> poly);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return order_; }
  /// Coefficients low to high, monic, length e+1.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long n) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;
  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const int> c) const;

  /// "c0,c1,...,c_{e-1}".
  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;

  /// All elements, lexicographic on the coefficient list (c0 first).
  const std::vector<Elem>& elements() const { return elements_; }

  /// Same p, e and modulus.
  bool same_as(const GaloisField& other) const;

 private:
  GaloisField(int p, int e, std::vector<int> modulus);
  std::size_t idx(Elem a, Elem b) const { return std::size_t(a) * std::size_t(order_) + b; }

  int p_;
  int e_;
  int order_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> elements_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Value-semantics wrapper pairing a code with its field. Mixing elements of
/// different fields throws FieldError.
class FieldElement {
 public:
  FieldElement(const GaloisField& field, Elem value);

  const GaloisField& field() const { return *field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(long long n) const;
  std::string to_string() const { return field_->format(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  const GaloisField* field_;
  Elem value_;
};

/// Dense row-major matrix over a GaloisField.
class FieldMatrix {
 public:
  FieldMatrix(const GaloisField& field, std::size_t rows, std::size_t cols);

  const GaloisField& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  FieldMatrix transpose() const;
  FieldMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  const GaloisField* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Reduced row-echelon form in place. Pivots are chosen as the first row
/// (from the current one down) with a nonzero entry in the column. Returns
/// the pivot columns.
std::vector<std::size_t> row_reduce(FieldMatrix& m);

std::size_t rank(FieldMatrix m);

/// Basis of the right nullspace, one vector per free column of the RREF.
/// Each vector has a 1 at its free column and zeros at the other free columns.
std::vector<std::vector<Elem>> nullspace(FieldMatrix m);

}  // namespace nwc
