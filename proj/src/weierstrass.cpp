#include "nwc/weierstrass.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nwc {

NumericalSemigroup NumericalSemigroup::from_bitmap(std::vector<bool> member) {
  if (member.empty() || !member[0]) throw SemigroupError("0 must be a member");
  const int limit = static_cast<int>(member.size()) - 1;
  int largest_gap = -1;
  int mult = 0;
  for (int s = 1; s <= limit; ++s) {
    if (!member[s]) largest_gap = s;
    else if (mult == 0) mult = s;
  }
  if (mult == 0 || limit - largest_gap < mult)
    throw SemigroupError("membership up to " + std::to_string(limit) + " does not stabilize; raise the limit");
  NumericalSemigroup s;
  s.conductor_ = largest_gap + 1;
  s.multiplicity_ = mult;
  for (int i = 1; i <= largest_gap; ++i)
    if (!member[i]) s.gaps_.push_back(i);
  return s;
}

NumericalSemigroup NumericalSemigroup::generated_by(std::span<const int> generators) {
  int g = 0;
  int smallest = 0;
  for (int x : generators) {
    if (x <= 0) throw SemigroupError("generators must be positive");
    g = std::gcd(g, x);
    smallest = smallest == 0 ? x : std::min(smallest, x);
  }
  if (g != 1) throw SemigroupError("generators must have gcd 1");
  std::vector<bool> member{true};
  int run = 0;
  for (int s = 1; run < smallest; ++s) {
    bool in = false;
    for (int x : generators)
      if (x <= s && member[s - x]) in = true;
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  return from_bitmap(std::move(member));
}

bool NumericalSemigroup::contains(int s) const {
  if (s < 0) return false;
  return s >= conductor_ || !std::binary_search(gaps_.begin(), gaps_.end(), s);
}

std::vector<int> NumericalSemigroup::generators() const {
  std::vector<int> gens;
  for (int s = 1; s < conductor_ + multiplicity_; ++s) {
    if (!contains(s)) continue;
    bool decomposable = false;
    for (int x : gens)
      if (contains(s - x)) decomposable = true;
    if (!decomposable) gens.push_back(s);
  }
  return gens;
}

std::vector<int> NumericalSemigroup::elements_upto(int n) const {
  std::vector<int> out;
  for (int s = 0; s <= n; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::string s = "<";
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + std::to_string(gens[i]);
  return s + ">";
}

// ---------------------------------------------------------------------------

namespace {

// Every c <= a with c_k = a_k; fixed >= a.size() leaves all coordinates free.
std::vector<DivisorVector> below(const DivisorVector& a, std::size_t fixed) {
  std::vector<DivisorVector> out;
  DivisorVector c(a.size());
  if (fixed < a.size()) c[fixed] = a[fixed];
  while (true) {
    out.push_back(c);
    std::size_t i = 0;
    for (; i < a.size(); ++i) {
      if (i == fixed) continue;
      if (c[i] < a[i]) {
        ++c[i];
        break;
      }
      c[i] = 0;
    }
    if (i == a.size()) break;
  }
  return out;
}

std::uint64_t mix(std::uint64_t seed, const DivisorVector& a) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (int v : a.values()) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

MultiPointSemigroup::MultiPointSemigroup(const RiemannRoch& rr, std::uint64_t seed) : rr_(&rr), seed_(seed) {}

bool MultiPointSemigroup::contains(const DivisorVector& a) const {
  if (a.size() != m()) throw std::invalid_argument("tuple length does not match the number of points");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = members_.find(a); it != members_.end()) return it->second;
  }
  const std::size_t d = rr_->dim(a);
  bool member = true;
  for (std::size_t i = 0; i < a.size() && member; ++i)
    if (a[i] > 0 && rr_->dim(a.minus_unit(i)) >= d) member = false;
  std::lock_guard<std::mutex> lock(mutex_);
  return members_.try_emplace(a, member).first->second;
}

std::optional<FunctionElement> MultiPointSemigroup::witness(const DivisorVector& a) const {
  if (!contains(a)) return std::nullopt;
  const auto basis = rr_->basis(a);
  for (const auto& f : basis->basis)
    if (rr_->rho(f) == a) return f;
  const GaloisField& field = rr_->field();
  std::mt19937_64 rng(mix(seed_, a));
  std::uniform_int_distribution<int> coeff(0, field.order() - 1);
  for (int attempt = 0; attempt < kWitnessRetries; ++attempt) {
    FunctionElement f = FunctionElement::zero(rr_->curve());
    for (const auto& b : basis->basis) f = f + b.scaled(static_cast<Elem>(coeff(rng)));
    if (!f.is_zero() && rr_->rho(f) == a) return f;
  }
  throw SemigroupError("no witness found for member (" + a.to_string() + ") after " +
                       std::to_string(kWitnessRetries) + " random combinations");
}

NumericalSemigroup MultiPointSemigroup::one_point_semigroup(std::size_t k, int limit) const {
  if (k >= m()) throw std::invalid_argument("point index out of range");
  if (limit < 1) throw std::invalid_argument("limit must be positive");
  std::vector<bool> bits(static_cast<std::size_t>(limit) + 1);
  DivisorVector a(m());
  for (int s = 0; s <= limit; ++s) {
    a[k] = s;
    bits[static_cast<std::size_t>(s)] = contains(a);
  }
  return NumericalSemigroup::from_bitmap(std::move(bits));
}

const NumericalSemigroup& MultiPointSemigroup::one_point(std::size_t k) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = axis_.find(k); it != axis_.end()) return *it->second;
  }
  auto s = std::make_unique<NumericalSemigroup>(one_point_semigroup(k, 4 * rr_->curve().genus() + 2));
  std::lock_guard<std::mutex> lock(mutex_);
  return *axis_.try_emplace(k, std::move(s)).first->second;
}

std::optional<DivisorVector> MultiPointSemigroup::fiber_minimal_below(const DivisorVector& a, std::size_t k) const {
  auto cands = below(a, k);
  std::stable_sort(cands.begin(), cands.end(), [](const DivisorVector& x, const DivisorVector& y) {
    return x.degree() != y.degree() ? x.degree() < y.degree() : x < y;
  });
  for (const auto& c : cands)
    if (contains(c)) return c;
  return std::nullopt;
}

bool MultiPointSemigroup::is_fiber_minimal(const DivisorVector& a, std::size_t k) const {
  if (!contains(a)) return false;
  for (const auto& c : below(a, k))
    if (c != a && contains(c)) return false;
  return true;
}

bool MultiPointSemigroup::is_minimal(const DivisorVector& a) const {
  if (!contains(a)) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && !is_fiber_minimal(a, k)) return false;
  return true;
}

std::vector<DivisorVector> MultiPointSemigroup::minimals(const DivisorVector& box) const {
  std::vector<DivisorVector> out;
  for (const auto& c : below(box, box.size()))
    if (is_minimal(c)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<DivisorVector>& MultiPointSemigroup::gamma_tilde() const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (gamma_tilde_) return *gamma_tilde_;
  }
  std::vector<std::vector<int>> choices(m());
  for (std::size_t k = 0; k < m(); ++k) {
    choices[k].push_back(0);
    for (int g : one_point(k).gaps()) choices[k].push_back(g);
  }
  auto found = std::make_unique<std::vector<DivisorVector>>();
  std::vector<std::size_t> idx(m(), 0);
  while (true) {
    DivisorVector c(m());
    for (std::size_t k = 0; k < m(); ++k) c[k] = choices[k][idx[k]];
    if (c.support_size() >= 2 && is_minimal(c)) found->push_back(c);
    std::size_t k = 0;
    for (; k < m(); ++k) {
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
    }
    if (k == m()) break;
  }
  std::sort(found->begin(), found->end());
  std::lock_guard<std::mutex> lock(mutex_);
  if (!gamma_tilde_) gamma_tilde_ = std::move(found);
  return *gamma_tilde_;
}

std::vector<DivisorVector> MultiPointSemigroup::lub_decompose(const DivisorVector& a) const {
  if (!contains(a)) throw SemigroupError("(" + a.to_string() + ") is not a member");
  if (a.support_size() == 0) return {a};
  std::vector<DivisorVector> out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    auto b = fiber_minimal_below(a, k);
    if (!b) throw SemigroupError("empty fiber below a member");
    if (std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(*b);
  }
  return out;
}

}  // namespace nwc
