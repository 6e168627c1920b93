#include "nwc/near_weights.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nwc {

RhoValue::RhoValue(int v) : v_(v) {
  if (v < 0) throw NearWeightError("near-weight values are nonnegative");
}

RhoValue RhoValue::neg_infinity() {
  RhoValue r;
  r.neg_inf_ = true;
  return r;
}

int RhoValue::value() const {
  if (neg_inf_) throw NearWeightError("value of the -inf marker requested");
  return v_;
}

std::string RhoValue::to_string() const { return neg_inf_ ? "-inf" : std::to_string(v_); }

RhoValue operator+(const RhoValue& a, const RhoValue& b) {
  if (a.neg_inf_ || b.neg_inf_) throw NearWeightError("arithmetic on the -inf marker");
  return RhoValue(a.v_ + b.v_);
}

std::strong_ordering operator<=>(const RhoValue& a, const RhoValue& b) {
  if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
  return a.v_ <=> b.v_;
}

// ---------------------------------------------------------------------------

NearWeight::NearWeight(const RiemannRoch& rr, std::size_t k) : rr_(&rr), k_(k) {
  if (k >= rr.m()) throw std::invalid_argument("near-weight index out of range");
}

RhoValue NearWeight::operator()(const FunctionElement& f) const {
  if (f.is_zero()) return RhoValue::neg_infinity();
  return RhoValue(rr_->rho(f)[k_]);
}

RhoValue NearWeight::unchecked(const FunctionElement& f) const {
  if (f.is_zero()) return RhoValue::neg_infinity();
  return RhoValue(rr_->pole_order(k_, f));
}

bool NearWeight::in_units(const FunctionElement& f) const {
  return unchecked(f) <= unchecked(FunctionElement::constant(rr_->curve(), 1));
}

int NearWeight::valuation_from_weights(const FunctionElement& f, const FunctionElement& g) const {
  const RhoValue rg = unchecked(g);
  const RhoValue rgf = unchecked(g * f);
  if (rg.is_neg_infinity() || rg.value() == 0 || rgf.is_neg_infinity() || rgf.value() == 0)
    throw NearWeightError("auxiliary function and product must both have positive weight");
  return rg.value() - rgf.value();
}

// ---------------------------------------------------------------------------

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.passed(); });
}

const CheckTally& AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

namespace {

class Tallies {
 public:
  explicit Tallies(std::vector<std::string> names) {
    for (auto& n : names) report_.checks.push_back({std::move(n), 0, {}});
  }
  void record(const std::string& name, bool ok, const std::string& detail) {
    CheckTally& t = get(name);
    ++t.checked;
    if (!ok && t.violations.size() < 20) t.violations.push_back(detail);
  }
  AxiomReport take() { return std::move(report_); }

 private:
  CheckTally& get(const std::string& name) {
    for (auto& c : report_.checks)
      if (c.name == name) return c;
    throw std::logic_error("unknown check " + name);
  }
  AxiomReport report_;
};

using Weights = std::vector<RhoValue>;

// All m weights from one ring-checked pole-order computation.
Weights weights_of(const RiemannRoch& rr, const FunctionElement& f) {
  if (f.is_zero()) return Weights(rr.m(), RhoValue::neg_infinity());
  const DivisorVector r = rr.rho(f);
  Weights out;
  for (int v : r.values()) out.emplace_back(v);
  return out;
}

std::string describe(const FunctionElement& f) { return "[" + f.to_string() + "]"; }

}  // namespace

AxiomReport verify_axioms(const MultiPointSemigroup& semigroup, std::size_t pairs, std::uint64_t seed) {
  const RiemannRoch& rr = semigroup.rr();
  const GaloisField& field = rr.field();
  const CurveModel& curve = rr.curve();
  const std::size_t m = rr.m();
  std::vector<NearWeight> ws;
  std::vector<int> upper;
  for (std::size_t k = 0; k < m; ++k) {
    ws.emplace_back(rr, k);
    upper.push_back(2 * semigroup.one_point(k).conductor() - 1);
  }

  Tallies t({"zero-marker", "scalar-invariance", "ultrametric", "product-monotone", "product-monotone-strict",
             "leading-cancellation", "cancellation-unique", "strict-max", "product-subadditive", "product-equality",
             "no-zero-divisors", "normalized", "nontrivial", "valuation-consistency"});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(0, field.order() - 1);
  auto random_divisor = [&] {
    DivisorVector a(m);
    for (std::size_t k = 0; k < m; ++k) a[k] = std::uniform_int_distribution<int>(0, upper[k])(rng);
    return a;
  };
  auto sample = [&](const DivisorVector& a) {
    FunctionElement f = FunctionElement::zero(curve);
    for (const auto& b : rr.basis(a)->basis) f = f + b.scaled(static_cast<Elem>(coeff(rng)));
    return f;
  };

  const FunctionElement one = FunctionElement::constant(curve, 1);
  for (const auto& w : ws) t.record("normalized", w(one) == RhoValue(0), "rho(1) != 0");
  std::vector<bool> seen_m(m, false);

  for (std::size_t i = 0; i < pairs; ++i) {
    const DivisorVector a = random_divisor();
    const DivisorVector b = (i % 2 == 0) ? a : random_divisor();
    const FunctionElement f = sample(a);
    // An occasional zero exercises the marker paths.
    const FunctionElement g = (i % 25 == 24) ? FunctionElement::zero(curve) : sample(b);
    const FunctionElement h = sample(random_divisor());

    const Weights rf = weights_of(rr, f), rg = weights_of(rr, g), rh = weights_of(rr, h);
    const FunctionElement sum = f + g, fh = f * h, gh = g * h, fg = f * g;
    const Weights rsum = weights_of(rr, sum), rfh = weights_of(rr, fh), rgh = weights_of(rr, gh),
                  rfg = weights_of(rr, fg);

    std::vector<Weights> scaled_f;
    for (Elem lam : field.elements())
      if (lam != 0) scaled_f.push_back(weights_of(rr, f.scaled(lam)));

    bool need_cancel = false;
    for (std::size_t k = 0; k < m; ++k)
      if (rf[k] == rg[k] && !rf[k].is_neg_infinity() && rf[k].value() > 0) need_cancel = true;
    std::vector<std::pair<Elem, Weights>> diffs;
    if (need_cancel)
      for (Elem lam : field.elements())
        if (lam != 0) diffs.emplace_back(lam, weights_of(rr, f - g.scaled(lam)));

    const std::string tag = "pair " + std::to_string(i) + " ";
    for (std::size_t k = 0; k < m; ++k) {
      const std::string at = tag + "k=" + std::to_string(k + 1) + " ";
      const bool fm = !rf[k].is_neg_infinity() && rf[k].value() > 0;
      const bool gm = !rg[k].is_neg_infinity() && rg[k].value() > 0;
      const bool hm = !rh[k].is_neg_infinity() && rh[k].value() > 0;
      if (fm) seen_m[k] = true;

      t.record("zero-marker", rf[k].is_neg_infinity() == f.is_zero(), at + describe(f));
      t.record("zero-marker", rg[k].is_neg_infinity() == g.is_zero(), at + describe(g));

      for (const auto& sw : scaled_f) t.record("scalar-invariance", sw[k] == rf[k], at + describe(f));

      t.record("ultrametric", rsum[k] <= std::max(rf[k], rg[k]), at + "f+g");
      if (rf[k] != rg[k]) t.record("strict-max", rsum[k] == std::max(rf[k], rg[k]), at + "f+g");

      auto monotone = [&](const Weights& lo, const Weights& lo_h, const Weights& hi, const Weights& hi_h) {
        if (!(lo[k] < hi[k])) return;
        t.record("product-monotone", lo_h[k] <= hi_h[k], at + "times h");
        if (hm) t.record("product-monotone-strict", lo_h[k] < hi_h[k], at + "times h");
      };
      monotone(rf, rfh, rg, rgh);
      monotone(rg, rgh, rf, rfh);

      if (fm && gm && rf[k] == rg[k]) {
        int lowering = 0;
        for (const auto& [lam, wd] : diffs)
          if (wd[k] < rf[k]) ++lowering;
        t.record("leading-cancellation", lowering >= 1, at + "no scalar lowers the weight");
        t.record("cancellation-unique", lowering == 1, at + std::to_string(lowering) + " scalars lower the weight");
      }

      if (!f.is_zero() && !g.is_zero())
        t.record("product-subadditive", rfg[k] <= rf[k] + rg[k], at + "f*g");
      if (fm && gm) {
        t.record("product-equality", rfg[k] == rf[k] + rg[k], at + "f*g");
        t.record("no-zero-divisors", !fg.is_zero(), at + "f*g == 0");
      }
      if (!f.is_zero() && !fm) t.record("normalized", rf[k] == RhoValue(0), at + describe(f));

      // Valuation recovered from weights alone must match the direct one.
      if (fm && gm) {
        const int v = ws[k].valuation_from_weights(f, g);
        t.record("valuation-consistency", v == -rf[k].value() && f.valuation(ws[k].place()).value() == v,
                 at + "recovered valuation " + std::to_string(v));
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k)
    t.record("nontrivial", seen_m[k], "no sample of positive weight at k=" + std::to_string(k + 1));
  return t.take();
}

AxiomReport complete_set_check(const MultiPointSemigroup& semigroup) {
  const RiemannRoch& rr = semigroup.rr();
  Tallies t({"constants-only", "cofinite-axis"});
  const auto basis0 = rr.basis(DivisorVector(rr.m()));
  t.record("constants-only", basis0->dim() == 1, "dim L(0) = " + std::to_string(basis0->dim()));
  for (const auto& f : basis0->basis) {
    const bool constant = f.denom_exp() == 0 && f.numerator().terms().size() == 1 &&
                          f.numerator().terms().begin()->first == Monomial{0, 0};
    t.record("constants-only", constant, "non-constant " + f.to_string());
  }
  for (std::size_t k = 0; k < rr.m(); ++k) {
    try {
      const auto& s = semigroup.one_point(k);
      t.record("cofinite-axis", s.conductor() >= 0, "");
    } catch (const SemigroupError& e) {
      t.record("cofinite-axis", false, "k=" + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return t.take();
}

}  // namespace nwc
