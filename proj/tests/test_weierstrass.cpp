#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nwc/weierstrass.hpp"
#include "support.hpp"

using namespace nwc;

namespace {

const MultiPointSemigroup& semigroup(int q) {
  static const MultiPointSemigroup h3(test::three_point(3));
  static const MultiPointSemigroup h4(test::three_point(4));
  return q == 3 ? h3 : h4;
}

DivisorVector poles_by_valuation(const RiemannRoch& rr, const FunctionElement& f) {
  DivisorVector out(rr.m());
  for (std::size_t k = 0; k < rr.m(); ++k) out[k] = std::max(0, -f.valuation(rr.points()[k]).value());
  return out;
}

// Membership by exhausting L(a): some combination of the basis has pole
// vector exactly a.
bool member_by_enumeration(const RiemannRoch& rr, const DivisorVector& a) {
  const auto basis = rr.basis(a)->basis;
  const auto& curve = rr.curve();
  const auto& els = rr.field().elements();
  std::vector<std::size_t> digit(basis.size(), 0);
  while (true) {
    FunctionElement f = FunctionElement::zero(curve);
    for (std::size_t i = 0; i < basis.size(); ++i) f = f + basis[i].scaled(els[digit[i]]);
    if (!f.is_zero() && poles_by_valuation(rr, f) == a) return true;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == els.size()) digit[i++] = 0;
    if (i == digit.size()) return false;
  }
}

}  // namespace

TEST_CASE("numerical semigroup basics") {
  const auto s = NumericalSemigroup::generated_by(std::vector<int>{3, 4});
  CHECK(s.gaps() == std::vector<int>{1, 2, 5});
  CHECK(s.conductor() == 6);
  CHECK(s.genus() == 3);
  CHECK(s.multiplicity() == 3);
  CHECK(s.generators() == std::vector<int>{3, 4});
  CHECK(s.to_string() == "<3,4>");
  CHECK(s.elements_upto(8) == std::vector<int>{0, 3, 4, 6, 7, 8});
  CHECK_THROWS_AS(NumericalSemigroup::generated_by(std::vector<int>{4, 6}), SemigroupError);

  std::vector<bool> bits{true, false, false, true, true, false, true, true, true};
  CHECK(NumericalSemigroup::from_bitmap(bits) == s);
  bits.pop_back();  // run after the last gap shorter than the multiplicity
  CHECK_THROWS_AS(NumericalSemigroup::from_bitmap(bits), SemigroupError);
}

TEST_CASE("generated semigroups: closure and conductor formula") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = 2 + static_cast<int>(rng() % 6);
    int b = 2 + static_cast<int>(rng() % 9);
    if (std::gcd(a, b) != 1) continue;
    const auto s = NumericalSemigroup::generated_by(std::vector<int>{a, b});
    CHECK(s.conductor() == (a - 1) * (b - 1));
    CHECK(s.genus() == (a - 1) * (b - 1) / 2);
    for (int x = 0; x < 30; ++x)
      for (int y = 0; y < 30; ++y)
        if (s.contains(x) && s.contains(y)) CHECK(s.contains(x + y));
  }
}

TEST_CASE("axis semigroups") {
  for (int q : {3, 4}) {
    const auto want = NumericalSemigroup::generated_by(std::vector<int>{q, q + 1});
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(semigroup(q).one_point(k) == want);
      CHECK(semigroup(q).one_point(k).conductor() == q * (q - 1));
    }
  }
}

TEST_CASE("dimension-drop membership agrees with exhaustive search") {
  const auto& h = semigroup(3);
  const auto& rr = h.rr();
  for (int a1 = 0; a1 <= 2; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2)
      for (int a3 = 0; a3 <= 2; ++a3) {
        const DivisorVector a{a1, a2, a3};
        if (a.degree() > 5) continue;
        CHECK_MESSAGE(h.contains(a) == member_by_enumeration(rr, a), a.to_string());
      }
}

TEST_CASE("witnesses realize their pole vectors") {
  const auto& h = semigroup(3);
  std::mt19937_64 rng(8);
  int found = 0;
  for (int trial = 0; trial < 80; ++trial) {
    DivisorVector a(3);
    for (int k = 0; k < 3; ++k) a[k] = static_cast<int>(rng() % 8);
    const auto w = h.witness(a);
    CHECK(w.has_value() == h.contains(a));
    if (w) {
      CHECK(poles_by_valuation(h.rr(), *w) == a);
      ++found;
    }
  }
  CHECK(found > 10);
}

TEST_CASE("closure under sum and lub") {
  const auto& h = semigroup(3);
  std::mt19937_64 rng(31);
  int pairs = 0;
  while (pairs < 200) {
    DivisorVector u(3), v(3);
    for (int k = 0; k < 3; ++k) {
      u[k] = static_cast<int>(rng() % 7);
      v[k] = static_cast<int>(rng() % 7);
    }
    if (!h.contains(u) || !h.contains(v)) continue;
    ++pairs;
    CHECK(h.contains(u + v));
    CHECK(h.contains(lub(u, v)));
  }
}

TEST_CASE("minimals with two or more nonzero entries") {
  const auto& h3 = semigroup(3);
  const std::vector<DivisorVector> want{{0, 1, 5}, {0, 2, 2}, {0, 5, 1}, {1, 0, 5}, {1, 1, 1},
                                        {1, 5, 0}, {2, 0, 2}, {2, 2, 0}, {5, 0, 1}, {5, 1, 0}};
  CHECK(h3.gamma_tilde() == want);
  for (const auto& g : h3.gamma_tilde()) {
    CHECK(h3.is_minimal(g));
    CHECK(g.support_size() >= 2);
    for (int v : g.values()) CHECK((v == 0 || !h3.one_point(0).contains(v)));
  }
  CHECK(semigroup(4).gamma_tilde().size() == 22);
}

TEST_CASE("minimality in fibers") {
  const auto& h = semigroup(3);
  // Brute force: no smaller member shares the k-th entry.
  for (const auto& a : h.minimals({4, 4, 4})) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (a[k] == 0) continue;
      bool smaller = false;
      for (int c1 = 0; c1 <= a[0]; ++c1)
        for (int c2 = 0; c2 <= a[1]; ++c2)
          for (int c3 = 0; c3 <= a[2]; ++c3) {
            const DivisorVector c{c1, c2, c3};
            if (c != a && c[k] == a[k] && h.contains(c)) smaller = true;
          }
      CHECK_FALSE(smaller);
    }
  }
}

TEST_CASE("members decompose as lub of fiber minimals") {
  const auto& h = semigroup(3);
  for (int a1 = 0; a1 <= 6; ++a1)
    for (int a2 = 0; a2 <= 6; ++a2)
      for (int a3 = 0; a3 <= 6; ++a3) {
        const DivisorVector a{a1, a2, a3};
        if (!h.contains(a)) {
          CHECK_THROWS_AS(h.lub_decompose(a), SemigroupError);
          continue;
        }
        if (a.degree() == 0) continue;
        const auto parts = h.lub_decompose(a);
        CHECK(lub(parts) == a);
        for (const auto& p : parts) {
          CHECK(p.leq(a));
          bool fiber_minimal = false;
          for (std::size_t k = 0; k < 3; ++k)
            if (p[k] == a[k] && p[k] > 0 && h.is_fiber_minimal(p, k)) fiber_minimal = true;
          CHECK(fiber_minimal);
        }
      }
}
