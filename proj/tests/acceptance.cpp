// Acceptance runner: one PASS/FAIL line per criterion, detail lines indented.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "nwc/bounds.hpp"
#include "nwc/codes.hpp"
#include "nwc/near_weights.hpp"
#include "nwc/riemann_roch.hpp"
#include "nwc/weierstrass.hpp"

using namespace nwc;

namespace {

constexpr double kTable1Seconds = 60.0;
constexpr double kTable2Seconds = 120.0;
constexpr double kAxiomSeconds = 60.0;
constexpr double kRiemannRochSeconds = 120.0;
constexpr double kDualSeconds = 300.0;
constexpr std::size_t kAxiomPairs = 1000;
constexpr std::uint64_t kAxiomSeed = 7;
constexpr int kClosurePairs = 200;
constexpr std::uint64_t kClosureSeed = 2024;

struct Setup {
  CurvePtr curve;
  RiemannRoch rr;
  MultiPointSemigroup h;
  BoundEngine engine;

  explicit Setup(int q) : curve(HermitianCurve::make(q)), rr(curve, {0, 1, 2}), h(rr), engine(h) {}
};

Setup& setup(int q) {
  static Setup s3(3);
  static Setup s4(4);
  return q == 3 ? s3 : s4;
}

struct Row {
  DivisorVector a;
  DivisorVector nu;
  DivisorVector limits;
  int delta;
  int goppa;
};

const std::vector<Row> kTable1 = {
    {{2, 1, 1}, {2, 2, 2}, {11, 11, 11}, 2, 0}, {{1, 2, 1}, {2, 2, 2}, {11, 11, 11}, 2, 0},
    {{1, 1, 2}, {2, 2, 2}, {11, 11, 11}, 2, 0}, {{2, 2, 1}, {2, 2, 3}, {11, 11, 11}, 2, 1},
    {{2, 1, 2}, {2, 3, 2}, {11, 11, 11}, 2, 1}, {{1, 2, 2}, {3, 2, 2}, {11, 11, 11}, 2, 1},
    {{2, 2, 2}, {3, 3, 3}, {11, 11, 11}, 2, 2}, {{3, 2, 2}, {4, 4, 4}, {11, 11, 11}, 3, 3},
    {{2, 3, 2}, {4, 4, 4}, {11, 11, 11}, 3, 3}, {{2, 2, 3}, {4, 4, 4}, {11, 11, 11}, 4, 3},
};

const std::vector<Row> kTable2 = {
    {{1, 2, 3}, {2, 2, 2}, {23, 23, 23}, 2, -4}, {{3, 1, 3}, {2, 2, 2}, {23, 23, 23}, 2, -3},
    {{3, 2, 3}, {2, 2, 2}, {23, 23, 23}, 2, -2}, {{3, 3, 3}, {2, 2, 2}, {23, 23, 23}, 2, -1},
    {{4, 3, 2}, {2, 2, 2}, {23, 23, 23}, 2, -1}, {{4, 3, 3}, {2, 2, 2}, {23, 23, 23}, 2, 0},
    {{4, 4, 3}, {2, 2, 3}, {23, 23, 23}, 2, 1},
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const DivisorVector& v) { return "(" + v.to_string() + ")"; }

void detail(const std::string& s) { std::cout << "  " << s << "\n"; }

bool report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << std::endl;
  return ok;
}

bool table_check(int q, const std::vector<Row>& rows, bool loose_first_nu3, double limit, int n,
                 const std::string& what) {
  Timer t;
  auto& s = setup(q);
  bool ok = true;
  for (const auto& row : rows) {
    const BoundReport r = s.engine.delta_bound(row.a);
    std::vector<std::string> bad;
    DivisorVector nu(r.nu);
    bool nu_ok = nu == row.nu;
    if (!nu_ok && loose_first_nu3 && row.a == DivisorVector{2, 1, 1} && nu[0] == row.nu[0] && nu[1] == row.nu[1] &&
        (nu[2] == 2 || nu[2] == 3)) {
      nu_ok = true;
    }
    if (loose_first_nu3 && row.a == DivisorVector{2, 1, 1})
      detail("flag: row (2,1,1) has nu3 = " + std::to_string(nu[2]) + "; 2 and 3 are both accepted here");
    if (!nu_ok) bad.push_back("nu " + fmt(nu) + " expected " + fmt(row.nu));
    if (r.limits != row.limits) bad.push_back("A " + fmt(r.limits) + " expected " + fmt(row.limits));
    if (r.delta != row.delta)
      bad.push_back("delta " + std::to_string(r.delta) + " expected " + std::to_string(row.delta));
    if (r.goppa != row.goppa)
      bad.push_back("d " + std::to_string(r.goppa) + " expected " + std::to_string(row.goppa));
    std::string line = fmt(row.a) + " nu=" + fmt(nu) + " A=" + fmt(r.limits) + " delta=" + std::to_string(r.delta) +
                       " d=" + std::to_string(r.goppa);
    if (bad.empty()) {
      detail("ok   " + line);
    } else {
      ok = false;
      std::string why;
      for (const auto& b : bad) why += "; " + b;
      detail("diff " + line + why);
    }
  }
  const double secs = t.seconds();
  detail("time " + std::to_string(secs) + " s (limit " + std::to_string(limit) + " s)");
  if (secs >= limit) ok = false;
  return report(n, ok, what);
}

bool criterion1() {
  return table_check(3, kTable1, true, kTable1Seconds, 1, "q=3 table rows over GF(9)");
}

bool criterion2() {
  return table_check(4, kTable2, false, kTable2Seconds, 2, "q=4 table rows over GF(16)");
}

bool chain_contains(const PairChain& c, const DivisorVector& u, const DivisorVector& v) {
  for (const auto& p : c.pairs)
    if ((p.u == u && p.v == v) || (p.u == v && p.v == u)) return true;
  return false;
}

bool criterion3() {
  auto& s = setup(3);
  const DivisorVector a{2, 1, 1};
  const DivisorVector z{0, 0, 0};
  const std::vector<std::vector<std::pair<DivisorVector, DivisorVector>>> wanted = {
      {{z, {3, 0, 0}}},
      {{z, {0, 3, 0}}},
      {{z, {0, 2, 2}}, {{1, 1, 1}, {1, 1, 1}}},
  };
  bool ok = true;
  for (std::size_t k = 0; k < 3; ++k) {
    for (CertifyMode mode : {CertifyMode::Semigroup, CertifyMode::Exact}) {
      const PairChain c = s.engine.nu(a, k, mode);
      std::string pairs;
      for (const auto& p : c.pairs) pairs += " " + fmt(p.u) + "|" + fmt(p.v);
      detail(std::string(mode == CertifyMode::Exact ? "exact     " : "semigroup ") + "k=" + std::to_string(k + 1) +
             " chain:" + pairs);
      for (const auto& [u, v] : wanted[k]) {
        if (chain_contains(c, u, v)) continue;
        ok = false;
        detail("missing " + fmt(u) + "|" + fmt(v) + " at k=" + std::to_string(k + 1));
      }
    }
    // Would a chain made of the listed pairs be admissible at all?
    PairChain listed;
    listed.k = k;
    listed.a = a;
    for (const auto& [u, v] : wanted[k]) listed.pairs.push_back({u, v, std::nullopt, std::nullopt});
    if (k == 0) listed.pairs.push_back({{3, 0, 0}, z, std::nullopt, std::nullopt});
    if (k == 1) listed.pairs.push_back({{0, 3, 0}, z, std::nullopt, std::nullopt});
    if (k == 2) listed.pairs.push_back({{0, 2, 2}, z, std::nullopt, std::nullopt});
    const auto problems = s.engine.verify_chain(listed, CertifyMode::Exact);
    for (const auto& p : problems) detail("listed chain k=" + std::to_string(k + 1) + ": " + p);
    if (problems.empty()) detail("listed chain k=" + std::to_string(k + 1) + " is admissible");
  }
  const DivisorVector bigger{2, 2, 1};
  for (std::size_t k = 1; k < 3; ++k) {
    const PairChain c = s.engine.nu(bigger, k);
    std::string pairs;
    for (const auto& p : c.pairs) pairs += " " + fmt(p.u) + "|" + fmt(p.v);
    detail("info: a=(2,2,1) k=" + std::to_string(k + 1) + " chain:" + pairs);
  }
  return report(3, ok, "listed witness pairs for a=(2,1,1)");
}

bool criterion4() {
  bool ok = true;
  for (int q : {3, 4}) {
    auto& s = setup(q);
    const auto want = NumericalSemigroup::generated_by(std::vector<int>{q, q + 1});
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& sk = s.h.one_point(k);
      const bool good = sk == want && sk.generators() == std::vector<int>{q, q + 1} &&
                        sk.conductor() == (q == 3 ? 6 : 12);
      detail("q=" + std::to_string(q) + " k=" + std::to_string(k + 1) + " " + sk.to_string() +
             " conductor=" + std::to_string(sk.conductor()));
      ok = ok && good;
    }
    for (int u = 0; u <= 10; ++u) {
      const PairCount pc = pair_count_formula(s.h.one_point(0), u);
      if (!pc.agrees()) {
        ok = false;
        detail("q=" + std::to_string(q) + " u=" + std::to_string(u) + " formula " + std::to_string(pc.formula) +
               " enumerated " + std::to_string(pc.enumerated));
      }
    }
    detail("q=" + std::to_string(q) + " pair counts checked for u=0..10");
  }
  return report(4, ok, "axis semigroups and pair counts");
}

bool criterion5() {
  Timer t;
  bool ok = true;
  for (int q : {3, 4}) {
    auto& s = setup(q);
    for (const AxiomReport& r : {verify_axioms(s.h, kAxiomPairs, kAxiomSeed), complete_set_check(s.h)})
      for (const auto& c : r.checks) {
        std::size_t violations = c.violations.size();
        detail("q=" + std::to_string(q) + " " + c.name + " checked=" + std::to_string(c.checked) +
               " violations=" + std::to_string(violations));
        for (const auto& v : c.violations) detail("    " + v);
        ok = ok && c.passed();
      }
  }
  const double secs = t.seconds();
  detail("time " + std::to_string(secs) + " s (limit " + std::to_string(kAxiomSeconds) + " s)");
  if (secs >= kAxiomSeconds) ok = false;
  return report(5, ok, "near-weight axiom suite, " + std::to_string(kAxiomPairs) + " pairs per curve");
}

bool criterion6() {
  Timer t;
  auto& s = setup(3);
  const int g = s.curve->genus();
  bool ok = true;
  int steps = 0, formula = 0;
  for (int a1 = 0; a1 <= 11; ++a1)
    for (int a2 = 0; a2 <= 11; ++a2)
      for (int a3 = 0; a3 <= 11; ++a3) {
        const DivisorVector a{a1, a2, a3};
        const auto d = s.rr.dim(a);
        if (a.degree() > 2 * g - 2) {
          ++formula;
          if (d != static_cast<std::size_t>(a.degree() + 1 - g)) {
            ok = false;
            detail("dim L" + fmt(a) + " = " + std::to_string(d));
          }
        }
        for (std::size_t k = 0; k < 3; ++k) {
          if (a[k] == 11) continue;
          ++steps;
          const auto up = s.rr.dim(a.plus_unit(k));
          if (up != d && up != d + 1) {
            ok = false;
            detail("jump at " + fmt(a) + " k=" + std::to_string(k + 1));
          }
        }
      }
  const double secs = t.seconds();
  detail(std::to_string(steps) + " unit steps and " + std::to_string(formula) + " degree checks");
  detail("time " + std::to_string(secs) + " s (limit " + std::to_string(kRiemannRochSeconds) + " s)");
  if (secs >= kRiemannRochSeconds) ok = false;
  return report(6, ok, "dimension jumps and Riemann formula on the box up to (11,11,11)");
}

bool criterion7() {
  auto& s = setup(3);
  bool ok = true;

  std::mt19937_64 rng(kClosureSeed);
  std::uniform_int_distribution<int> entry(0, 11);
  int pairs = 0, closure_failures = 0;
  while (pairs < kClosurePairs) {
    const DivisorVector u{entry(rng), entry(rng), entry(rng)};
    const DivisorVector v{entry(rng), entry(rng), entry(rng)};
    if (!s.h.contains(u) || !s.h.contains(v)) continue;
    ++pairs;
    if (!s.h.contains(u + v) || !s.h.contains(lub(u, v))) {
      ++closure_failures;
      detail("closure fails for " + fmt(u) + ", " + fmt(v));
    }
  }
  detail(std::to_string(pairs) + " member pairs, " + std::to_string(closure_failures) + " closure failures");
  ok = ok && closure_failures == 0;

  const std::set<int> gaps{1, 2, 5};
  std::string listing;
  bool in_cube = true, nonzero_gaps = true;
  for (const auto& g : s.h.gamma_tilde()) {
    listing += " " + fmt(g);
    for (int v : g.values()) {
      if (!gaps.count(v)) in_cube = false;
      if (v != 0 && !gaps.count(v)) nonzero_gaps = false;
    }
  }
  detail("minimals with two or more nonzero entries:" + listing);
  for (const auto& g : s.h.gamma_tilde()) {
    if (std::all_of(g.values().begin(), g.values().end(), [&](int v) { return gaps.count(v) > 0; })) continue;
    const auto w = s.h.witness(g);
    std::string poles;
    if (w)
      for (std::size_t k = 0; k < 3; ++k)
        poles += (k ? "," : "") + std::to_string(std::max(0, -w->valuation(s.rr.points()[k]).value()));
    detail("outside {1,2,5}^3: " + fmt(g) + " realized by " + (w ? w->to_string() : "nothing") +
           " with valuation pole orders (" + poles + ")");
  }
  detail(std::string("every nonzero entry is a gap of <3,4>: ") + (nonzero_gaps ? "yes" : "no"));
  detail(std::string("contained in {1,2,5}^3: ") + (in_cube ? "yes" : "no"));
  ok = ok && in_cube;

  int members = 0, decomposition_failures = 0;
  for (int a1 = 0; a1 <= 11; ++a1)
    for (int a2 = 0; a2 <= 11; ++a2)
      for (int a3 = 0; a3 <= 11; ++a3) {
        const DivisorVector a{a1, a2, a3};
        if (!s.h.contains(a) || a.degree() == 0) continue;
        ++members;
        const auto parts = s.h.lub_decompose(a);
        bool good = lub(parts) == a;
        for (const auto& p : parts) good = good && s.h.is_minimal(p) && p.leq(a);
        if (!good) {
          ++decomposition_failures;
          detail("no lub decomposition for " + fmt(a));
        }
      }
  detail(std::to_string(members) + " nonzero box members, " + std::to_string(decomposition_failures) +
         " decomposition failures");
  ok = ok && decomposition_failures == 0;
  return report(7, ok, "semigroup closure, minimals and lub decomposition");
}

bool criterion8() {
  Timer t;
  auto& s = setup(3);
  const auto eval = default_eval_places(s.rr);
  bool ok = eval.size() == 24;
  for (const auto& row : kTable1) {
    const int delta = s.engine.delta_bound(row.a).delta;
    const auto code = build_code(s.rr, row.a, eval);
    const DualDistance d = dual_min_distance_upto(code, delta - 1);
    const DualDistance exact = dual_min_distance_upto(code, delta + 2);
    const bool good = !d.distance.has_value();
    detail(fmt(row.a) + " n=" + std::to_string(code.length()) + " k=" + std::to_string(code.dimension) +
           " delta=" + std::to_string(delta) + " no dependent set below delta: " + (good ? "yes" : "no") +
           "; dual distance " + (exact.distance ? std::to_string(*exact.distance) : "> " + std::to_string(delta + 2)));
    ok = ok && good;
  }
  const double secs = t.seconds();
  detail("time " + std::to_string(secs) + " s (limit " + std::to_string(kDualSeconds) + " s)");
  if (secs >= kDualSeconds) ok = false;
  return report(8, ok, "bound below the dual distance on the n=24 codes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<bool()>> all = {criterion1, criterion2, criterion3, criterion4,
                                                  criterion5, criterion6, criterion7, criterion8};
  bool ok = true;
  for (int i = 1; i <= 8; ++i)
    if (only == 0 || only == i) ok = all[static_cast<std::size_t>(i - 1)]() && ok;
  return ok ? 0 : 1;
}
