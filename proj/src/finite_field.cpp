#include "nwc/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nwc {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod_p(int a, int p) {
  // p is small, so a linear scan is enough.
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw FieldError("no inverse mod p");
}

// Remainder of a modulo monic b over GF(p); coefficient lists low to high.
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> b, int p) {
  const std::size_t db = b.size() - 1;
  const int lead_inv = inv_mod_p(b.back(), p);
  while (a.size() > db) {
    const int c = (a.back() * lead_inv) % p;
    if (c != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod_p(a[shift + i] - c * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool GaloisField::is_irreducible(int p, std::span<const int> poly) {
  std::vector<int> f(poly.begin(), poly.end());
  while (!f.empty() && mod_p(f.back(), p) == 0) f.pop_back();
  if (f.size() < 2) return false;
  for (auto& c : f) c = mod_p(c, p);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree d: code k in [0, p^d) gives the
  // lower coefficients.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> g(d + 1);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      auto r = poly_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::vector<int> GaloisField::default_modulus(int p, int e) {
  if (e < 1) throw FieldError("extension degree must be >= 1");
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> m(e + 1);
    long long c = code;
    for (int i = 0; i < e; ++i) {
      m[i] = static_cast<int>(c % p);
      c /= p;
    }
    m[e] = 1;
    if (is_irreducible(p, m)) return m;
  }
  throw FieldError("no irreducible polynomial found");
}

std::shared_ptr<const GaloisField> GaloisField::make(int p, int e, std::vector<int> modulus) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw FieldError("extension degree must be >= 1");
  long long order = 1;
  for (int i = 0; i < e; ++i) {
    order *= p;
    if (order > kMaxOrder) throw FieldError("field order exceeds " + std::to_string(kMaxOrder));
  }
  if (modulus.empty()) {
    modulus = default_modulus(p, e);
  } else {
    for (auto& c : modulus) c = mod_p(c, p);
    if (static_cast<int>(modulus.size()) != e + 1 || modulus.back() != 1)
      throw FieldError("modulus must be monic of degree " + std::to_string(e));
    if (!is_irreducible(p, modulus)) throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  return std::shared_ptr<const GaloisField>(new GaloisField(p, e, std::move(modulus)));
}

GaloisField::GaloisField(int p, int e, std::vector<int> modulus) : p_(p), e_(e), order_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e_; ++i) order_ *= p_;
  const std::size_t n = static_cast<std::size_t>(order_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);

  std::vector<std::vector<int>> digits(n);
  for (std::size_t a = 0; a < n; ++a) digits[a] = coeffs(static_cast<Elem>(a));

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> ng(e_);
    for (int i = 0; i < e_; ++i) ng[i] = mod_p(-digits[a][i], p_);
    neg_[a] = from_coeffs(ng);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> s(e_);
      for (int i = 0; i < e_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[a * n + b] = from_coeffs(s);
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
      auto r = poly_rem(prod, modulus_, p_);
      r.resize(e_, 0);
      mul_[a * n + b] = from_coeffs(r);
    }
  }
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      if (mul_[a * n + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }

  elements_.resize(n);
  for (std::size_t a = 0; a < n; ++a) elements_[a] = static_cast<Elem>(a);
  std::sort(elements_.begin(), elements_.end(),
            [&](Elem x, Elem y) { return digits[x] < digits[y]; });
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw FieldError("inversion of zero");
  return inv_[a];
}

Elem GaloisField::pow(Elem a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Elem result = 1;
  Elem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Elem GaloisField::from_int(long long v) const { return static_cast<Elem>(mod_p(v, p_)); }

std::vector<int> GaloisField::coeffs(Elem a) const {
  std::vector<int> c(e_);
  int v = a;
  for (int i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Elem GaloisField::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) > e_) throw FieldError("too many coefficients for GF(" + std::to_string(order_) + ")");
  int v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + mod_p(c[i], p_);
  return static_cast<Elem>(v);
}

std::string GaloisField::format(Elem a) const {
  const auto c = coeffs(a);
  std::string out;
  for (int i = 0; i < e_; ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Elem GaloisField::parse(std::string_view text) const {
  std::vector<int> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw FieldError("bad field element '" + std::string(text) + "'");
    if (v < 0 || v >= p_) throw FieldError("coefficient out of range in '" + std::string(text) + "'");
    c.push_back(v);
    pos = comma + 1;
  }
  return from_coeffs(c);
}

bool GaloisField::same_as(const GaloisField& other) const {
  return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

// ---------------------------------------------------------------------------

namespace {
const GaloisField& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_as(b.field())) throw FieldError("operands belong to different fields");
  return a.field();
}
}  // namespace

FieldElement::FieldElement(const GaloisField& field, Elem value) : field_(&field), value_(value) {
  if (value >= field.order()) throw FieldError("element code out of range");
}

FieldElement FieldElement::inverse() const { return {*field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(long long n) const { return {*field_, field_->pow(value_, n)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f.div(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a) { return {*a.field_, a.field_->neg(a.value_)}; }
bool operator==(const FieldElement& a, const FieldElement& b) {
  common_field(a, b);
  return a.value_ == b.value_;
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(const GaloisField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void FieldMatrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw FieldError("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(*field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> cols) const {
  FieldMatrix s(*field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) s(r, j) = (*this)(r, cols[j]);
  return s;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> row_reduce(FieldMatrix& m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) std::swap_ranges(m.row(pr).begin(), m.row(pr).end(), m.row(r).begin());
    auto pivot_row = m.row(r);
    const Elem scale = f.inv(pivot_row[c]);
    for (std::size_t j = c; j < m.cols(); ++j) pivot_row[j] = f.mul(pivot_row[j], scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = f.neg(m(i, c));
      auto row = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (pivot_row[j] != 0) row[j] = f.add(row[j], f.mul(factor, pivot_row[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(FieldMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Elem>> nullspace(FieldMatrix m) {
  const auto& f = m.field();
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nwc
