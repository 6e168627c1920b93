#include "nwc/divisor.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace nwc {

DivisorVector::DivisorVector(std::initializer_list<int> values) : DivisorVector(std::vector<int>(values)) {}

DivisorVector::DivisorVector(std::vector<int> values) : v_(std::move(values)) {
  for (int x : v_)
    if (x < 0) throw std::invalid_argument("divisor entries must be nonnegative");
}

DivisorVector DivisorVector::unit(std::size_t m, std::size_t k) {
  if (k >= m) throw std::invalid_argument("unit index out of range");
  DivisorVector e(m);
  e.v_[k] = 1;
  return e;
}

DivisorVector DivisorVector::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '(')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == ')')) tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw std::invalid_argument("bad divisor tuple '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return DivisorVector(std::move(out));
}

int DivisorVector::degree() const { return std::accumulate(v_.begin(), v_.end(), 0); }

int DivisorVector::max_entry() const { return v_.empty() ? 0 : *std::max_element(v_.begin(), v_.end()); }

std::size_t DivisorVector::support_size() const {
  return static_cast<std::size_t>(std::count_if(v_.begin(), v_.end(), [](int x) { return x != 0; }));
}

bool DivisorVector::leq(const DivisorVector& b) const {
  if (b.size() != size()) throw std::invalid_argument("divisor length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] > b.v_[i]) return false;
  return true;
}

DivisorVector DivisorVector::plus_unit(std::size_t k) const {
  DivisorVector r = *this;
  ++r.v_.at(k);
  return r;
}

DivisorVector DivisorVector::minus_unit(std::size_t k) const {
  if (v_.at(k) == 0) throw std::invalid_argument("entry already zero");
  DivisorVector r = *this;
  --r.v_[k];
  return r;
}

std::string DivisorVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v_[i]);
  }
  return s;
}

DivisorVector operator+(const DivisorVector& a, const DivisorVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("divisor length mismatch");
  DivisorVector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.v_[i] += b.v_[i];
  return r;
}

DivisorVector lub(std::span<const DivisorVector> items) {
  if (items.empty()) throw std::invalid_argument("lub of an empty list");
  DivisorVector r = items.front();
  for (const auto& d : items.subspan(1)) {
    if (d.size() != r.size()) throw std::invalid_argument("divisor length mismatch");
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], d[i]);
  }
  return r;
}

DivisorVector lub(const DivisorVector& a, const DivisorVector& b) {
  const DivisorVector both[] = {a, b};
  return lub(both);
}

}  // namespace nwc
