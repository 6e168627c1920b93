#include "nwc/bounds.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace nwc {

PairCount pair_count_formula(const NumericalSemigroup& s, int u) {
  if (u < 0) throw std::invalid_argument("u must be nonnegative");
  PairCount out;
  const int c = s.conductor();
  out.formula = 2 * (c - s.genus()) + u - 1;
  const int target = 2 * c + u;
  for (int x = 1; x < target; ++x)
    if (s.contains(x) && s.contains(target - x)) out.pairs.emplace_back(x, target - x);
  out.enumerated = static_cast<int>(out.pairs.size());
  return out;
}

Path Path::from_steps(const DivisorVector& start, const std::vector<std::size_t>& steps) {
  Path p;
  p.points.push_back(start);
  for (std::size_t k : steps) {
    if (k >= start.size()) throw std::invalid_argument("step coordinate out of range");
    p.points.push_back(p.points.back().plus_unit(k));
  }
  p.steps = steps;
  return p;
}

void Path::validate() const {
  if (points.empty()) throw std::invalid_argument("empty path");
  if (steps.size() + 1 != points.size()) throw std::invalid_argument("path steps and points disagree");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] >= points[i].size() || points[i].plus_unit(steps[i]) != points[i + 1])
      throw std::invalid_argument("path is not ascending by unit steps at position " + std::to_string(i));
  }
}

std::string Path::steps_string() const {
  std::string s;
  for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? "," : "") + std::to_string(steps[i] + 1);
  return s;
}

int goppa_bound(const DivisorVector& a, int genus) { return a.degree() - (2 * genus - 2); }

// ---------------------------------------------------------------------------

BoundEngine::BoundEngine(const MultiPointSemigroup& semigroup, std::optional<DivisorVector> box)
    : h_(&semigroup), box_(std::move(box)) {
  if (box_ && box_->size() != semigroup.m()) throw std::invalid_argument("box has the wrong number of entries");
}

void BoundEngine::check_box(const DivisorVector& t) const {
  if (box_ && !t.leq(*box_))
    throw BoxTooSmall("search box (" + box_->to_string() + ") does not contain (" + t.to_string() +
                      "); enlarge it to at least (" + lub(*box_, t).to_string() + ")");
}

std::vector<DivisorVector> BoundEngine::candidates(std::size_t k, int t, const DivisorVector& bound) const {
  std::vector<DivisorVector> out;
  if (t < 0) return out;
  if (h_->one_point(k).contains(t)) {
    DivisorVector w(h_->m());
    w[k] = t;
    if (w.leq(bound)) out.push_back(w);
    return out;
  }
  for (const auto& w : h_->gamma_tilde())
    if (w[k] == t && w.leq(bound)) out.push_back(w);
  return out;
}

const FunctionElement& BoundEngine::witness(const DivisorVector& u) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = witnesses_.find(u); it != witnesses_.end()) return it->second;
  }
  auto w = h_->witness(u);
  if (!w) throw SemigroupError("(" + u.to_string() + ") is not a member");
  std::lock_guard<std::mutex> lock(mutex_);
  return witnesses_.try_emplace(u, std::move(*w)).first->second;
}

DivisorVector BoundEngine::product_rho(const DivisorVector& u, const DivisorVector& v) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = products_.find({u, v}); it != products_.end()) return it->second;
  }
  const DivisorVector r = h_->rr().rho(witness(u) * witness(v));
  std::lock_guard<std::mutex> lock(mutex_);
  return products_.try_emplace({u, v}, r).first->second;
}

PairChain BoundEngine::search(const DivisorVector& a, std::size_t k, CertifyMode mode) const {
  if (k >= a.size()) throw std::invalid_argument("coordinate out of range");
  const DivisorVector top = a.plus_unit(k);
  check_box(top);
  const int total = a[k] + 1;
  const bool exact = mode == CertifyMode::Exact;

  struct Cand {
    DivisorVector u, v;
  };
  std::vector<std::vector<Cand>> levels(static_cast<std::size_t>(total) + 1);
  for (int t = 0; t <= total; ++t) {
    const auto us = candidates(k, t, top);
    const auto vs = candidates(k, total - t, top);
    for (const auto& u : us)
      for (const auto& v : vs) {
        const bool diag = exact ? product_rho(u, v).leq(top) : (u + v).leq(top);
        if (diag) levels[static_cast<std::size_t>(t)].push_back({u, v});
      }
    auto& lv = levels[static_cast<std::size_t>(t)];
    std::sort(lv.begin(), lv.end(), [](const Cand& x, const Cand& y) {
      return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
  }
  std::vector<int> nonempty_after(levels.size() + 1, 0);
  for (std::size_t t = levels.size(); t-- > 0;) nonempty_after[t] = nonempty_after[t + 1] + (levels[t].empty() ? 0 : 1);

  auto compatible = [&](const Cand& earlier, const Cand& later) {
    return exact ? product_rho(earlier.u, later.v).leq(a) : (earlier.u + later.v).leq(a);
  };

  std::vector<const Cand*> chain, best;
  bool found = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t t) {
    if (found && chain.size() + static_cast<std::size_t>(nonempty_after[t]) <= best.size()) return;
    if (t == levels.size()) {
      best = chain;
      found = true;
      return;
    }
    for (const auto& c : levels[t]) {
      bool ok = true;
      for (const Cand* e : chain)
        if (!compatible(*e, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chain.push_back(&c);
      dfs(t + 1);
      chain.pop_back();
    }
    dfs(t + 1);
  };
  dfs(0);

  PairChain out;
  out.k = k;
  out.a = a;
  out.mode = mode;
  for (const Cand* c : best) {
    ChainPair p{c->u, c->v, std::nullopt, std::nullopt};
    if (exact) {
      p.f = witness(c->u);
      p.g = witness(c->v);
    }
    out.pairs.push_back(std::move(p));
  }
  return out;
}

PairChain BoundEngine::nu(const DivisorVector& a, std::size_t k, CertifyMode mode) const {
  const auto key = std::make_tuple(a, k, mode);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = chains_.find(key); it != chains_.end()) return it->second;
  }
  PairChain c = search(a, k, mode);
  std::lock_guard<std::mutex> lock(mutex_);
  return chains_.try_emplace(key, std::move(c)).first->second;
}

int BoundEngine::nu_value(const DivisorVector& a, std::size_t k, CertifyMode mode) const {
  return static_cast<int>(nu(a, k, mode).size());
}

std::vector<int> BoundEngine::nu_vector(const DivisorVector& a, CertifyMode mode) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(nu_value(a, k, mode));
  return out;
}

DivisorVector BoundEngine::truncation_limits(const DivisorVector& a, CertifyMode mode) const {
  DivisorVector limits(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& s = h_->one_point(k);
    const int c = s.conductor();
    const int threshold = 2 * (c - s.genus()) - 1;
    const int v = nu_value(a, k, mode);
    limits[k] = v > threshold ? 2 * c + (v - threshold) - 1 : 2 * c - 1;
  }
  return limits;
}

Path BoundEngine::default_path(const DivisorVector& a, const DivisorVector& limits) const {
  std::vector<std::size_t> steps;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (int x = a[k]; x < limits[k]; ++x) steps.push_back(k);
  return Path::from_steps(a, steps);
}

BoundReport BoundEngine::delta_bound(const DivisorVector& a, CertifyMode mode) const {
  return delta_bound(a, default_path(a, truncation_limits(a, mode)), mode);
}

BoundReport BoundEngine::delta_bound(const DivisorVector& a, const Path& path, CertifyMode mode) const {
  path.validate();
  BoundReport r;
  r.a = a;
  r.nu = nu_vector(a, mode);
  r.limits = truncation_limits(a, mode);
  if (path.start() != a) throw std::invalid_argument("path does not start at (" + a.to_string() + ")");
  const DivisorVector end = lub(a, r.limits);
  if (path.end() != end) throw std::invalid_argument("path does not end at (" + end.to_string() + ")");
  r.path = path;
  r.delta = path.steps.empty() ? 0 : INT_MAX;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const int v = nu_value(path.points[i], path.steps[i], mode);
    r.step_nu.push_back(v);
    if (v < r.delta) {
      r.delta = v;
      r.argmin = i;
    }
  }
  r.goppa = goppa_bound(a, h_->rr().curve().genus());
  return r;
}

BoundReport BoundEngine::delta_bound_search(const DivisorVector& a, CertifyMode mode) const {
  const DivisorVector end = lub(a, truncation_limits(a, mode));
  const std::size_t m = a.size();
  // Every x with a <= x <= end, processed from the top down.
  std::vector<DivisorVector> nodes;
  {
    DivisorVector x = a;
    while (true) {
      nodes.push_back(x);
      std::size_t i = 0;
      for (; i < m; ++i) {
        if (x[i] < end[i]) {
          ++x[i];
          break;
        }
        x[i] = a[i];
      }
      if (i == m) break;
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const DivisorVector& p, const DivisorVector& q) {
    return p.degree() != q.degree() ? p.degree() > q.degree() : p < q;
  });
  std::map<DivisorVector, std::pair<int, std::size_t>> best;
  for (const auto& x : nodes) {
    if (x == end) {
      best[x] = {INT_MAX, m};
      continue;
    }
    std::pair<int, std::size_t> b{-1, m};
    for (std::size_t k = 0; k < m; ++k) {
      if (x[k] >= end[k]) continue;
      const int v = std::min(nu_value(x, k, mode), best.at(x.plus_unit(k)).first);
      if (v > b.first) b = {v, k};
    }
    best[x] = b;
  }
  std::vector<std::size_t> steps;
  for (DivisorVector x = a; x != end;) {
    const std::size_t k = best.at(x).second;
    steps.push_back(k);
    x = x.plus_unit(k);
  }
  return delta_bound(a, Path::from_steps(a, steps), mode);
}

std::vector<std::string> BoundEngine::verify_chain(const PairChain& chain, CertifyMode mode) const {
  std::vector<std::string> problems;
  const DivisorVector& a = chain.a;
  const std::size_t k = chain.k;
  const DivisorVector top = a.plus_unit(k);
  const bool exact = mode == CertifyMode::Exact;
  auto rho_of = [&](const DivisorVector& u, const DivisorVector& v, std::size_t i, std::size_t j) {
    if (chain.pairs[i].f && chain.pairs[j].g) return h_->rr().rho(*chain.pairs[i].f * *chain.pairs[j].g);
    return product_rho(u, v);
  };
  for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
    const auto& p = chain.pairs[i];
    const std::string at = "pair " + std::to_string(i) + " ";
    if (!h_->contains(p.u) || !h_->contains(p.v)) problems.push_back(at + "has a non-member entry");
    if (!p.u.leq(top) || !p.v.leq(top)) problems.push_back(at + "exceeds a + e_k");
    if (p.u[k] + p.v[k] != a[k] + 1) problems.push_back(at + "k-entries do not sum to a_k + 1");
    if (i > 0 && chain.pairs[i - 1].u[k] >= p.u[k]) problems.push_back(at + "k-entry of u not increasing");
    if (p.f && h_->rr().rho(*p.f) != p.u) problems.push_back(at + "first witness has the wrong pole orders");
    if (p.g && h_->rr().rho(*p.g) != p.v) problems.push_back(at + "second witness has the wrong pole orders");
    const DivisorVector diag = exact ? rho_of(p.u, p.v, i, i) : p.u + p.v;
    if (!diag.leq(top)) problems.push_back(at + "own product exceeds a + e_k");
    for (std::size_t j = i + 1; j < chain.pairs.size(); ++j) {
      const DivisorVector cross = exact ? rho_of(p.u, chain.pairs[j].v, i, j) : p.u + chain.pairs[j].v;
      if (!cross.leq(a))
        problems.push_back(at + "times second factor of pair " + std::to_string(j) + " leaves L(a)");
    }
  }
  return problems;
}

}  // namespace nwc
