#pragma once

#include <random>
#include <vector>

#include "nwc/curve.hpp"
#include "nwc/finite_field.hpp"
#include "nwc/function.hpp"
#include "nwc/riemann_roch.hpp"

namespace nwc::test {

inline const CurvePtr& hermitian(int q) {
  static const CurvePtr c3 = HermitianCurve::make(3);
  static const CurvePtr c4 = HermitianCurve::make(4);
  return q == 3 ? c3 : c4;
}

inline const RiemannRoch& three_point(int q) {
  static const RiemannRoch r3(hermitian(3), {0, 1, 2});
  static const RiemannRoch r4(hermitian(4), {0, 1, 2});
  return q == 3 ? r3 : r4;
}

inline Elem random_elem(const GaloisField& f, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> d(nonzero ? 1 : 0, f.order() - 1);
  return static_cast<Elem>(d(rng));
}

inline FieldMatrix random_matrix(const GaloisField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_elem(f, rng);
  return m;
}

/// Number of distinct vectors in the row span, by closure. Only for tiny
/// matrices; q^rank equals this count.
inline std::size_t span_size(const FieldMatrix& m) {
  const GaloisField& f = m.field();
  std::vector<std::vector<Elem>> span{std::vector<Elem>(m.cols(), 0)};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::vector<Elem>> next;
    for (const auto& v : span)
      for (Elem c : f.elements()) {
        auto w = v;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(c, m(r, j)));
        next.push_back(std::move(w));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = std::move(next);
  }
  return span.size();
}

inline std::size_t log_base(std::size_t n, std::size_t b) {
  std::size_t k = 0;
  while (n > 1) {
    n /= b;
    ++k;
  }
  return k;
}

}  // namespace nwc::test
