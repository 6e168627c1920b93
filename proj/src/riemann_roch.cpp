#include "nwc/riemann_roch.hpp"

#include <algorithm>
#include <set>

namespace nwc {

RiemannRoch::RiemannRoch(CurvePtr curve, std::vector<std::size_t> point_indices)
    : curve_(std::move(curve)), indices_(std::move(point_indices)) {
  const auto& zeros = curve_->x_zero_places();
  if (indices_.empty()) throw std::invalid_argument("at least one point is required");
  if (indices_.size() > zeros.size())
    throw std::invalid_argument("only " + std::to_string(zeros.size()) + " places lie on x = 0");
  std::set<std::size_t> seen;
  for (std::size_t i : indices_) {
    if (i >= zeros.size()) throw std::invalid_argument("point index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) throw std::invalid_argument("point index " + std::to_string(i) + " repeated");
    points_.push_back(zeros[i]);
  }
  slot_.assign(zeros.size(), -1);
  for (std::size_t k = 0; k < indices_.size(); ++k) slot_[indices_[k]] = static_cast<int>(k);
}

bool RiemannRoch::is_point(const RationalPlace& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

void RiemannRoch::check_size(const DivisorVector& a) const {
  if (a.size() != m())
    throw std::invalid_argument("divisor has " + std::to_string(a.size()) + " entries, expected " +
                                std::to_string(m()));
}

std::vector<Monomial> RiemannRoch::candidates(int n) const {
  const int q = curve_->q();
  std::vector<Monomial> out;
  for (int j = 0; j < q; ++j)
    for (int i = 0; curve_->weight({i, j}) <= q * n; ++i) out.push_back({i, j});
  std::sort(out.begin(), out.end(), [&](Monomial a, Monomial b) { return curve_->weight(a) < curve_->weight(b); });
  return out;
}

FieldMatrix RiemannRoch::constraints(const DivisorVector& a, const std::vector<Monomial>& cands) const {
  const GaloisField& f = field();
  const int n = a.max_entry();
  const auto& zeros = curve_->x_zero_places();
  const int q = curve_->q();
  FieldMatrix mat(f, 0, cands.size());
  const std::size_t prec = static_cast<std::size_t>(std::max(n, 1));
  for (std::size_t p = 0; p < zeros.size(); ++p) {
    const int need = n - (slot_[p] >= 0 ? a[static_cast<std::size_t>(slot_[p])] : 0);
    if (need <= 0) continue;
    // x is the uniformizer here, so x^i y^j has series t^i Y(t)^j.
    const auto b = curve_->branch(zeros[p], prec);
    const PowerSeries y = b->y.truncated(prec);
    std::vector<PowerSeries> ypow;
    ypow.push_back(PowerSeries::constant(f, 1, prec));
    for (int j = 1; j < q; ++j) ypow.push_back(ypow.back() * y);
    std::vector<Elem> row(cands.size());
    for (int o = 0; o < need; ++o) {
      for (std::size_t c = 0; c < cands.size(); ++c) {
        const Monomial mono = cands[c];
        row[c] = o >= mono.x ? ypow[static_cast<std::size_t>(mono.y)].coeff(static_cast<std::size_t>(o - mono.x)) : 0;
      }
      mat.append_row(row);
    }
  }
  return mat;
}

std::size_t RiemannRoch::dim(const DivisorVector& a) const {
  check_size(a);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = dims_.find(a); it != dims_.end()) return it->second;
    if (auto it = bases_.find(a); it != bases_.end()) return it->second->dim();
  }
  const auto cands = candidates(a.max_entry());
  const std::size_t d = cands.size() - rank(constraints(a, cands));
  std::lock_guard<std::mutex> lock(mutex_);
  return dims_.try_emplace(a, d).first->second;
}

std::shared_ptr<const RRBasis> RiemannRoch::basis(const DivisorVector& a) const {
  check_size(a);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = bases_.find(a); it != bases_.end()) return it->second;
  }
  const GaloisField& f = field();
  const int n = a.max_entry();
  const auto cands = candidates(n);
  FieldMatrix cons = constraints(a, cands);
  const auto null = cons.rows() == 0 ? std::vector<std::vector<Elem>>{} : nullspace(cons);

  // Canonical form: RREF of the solution space, pivots on the lowest-weight
  // monomials.
  FieldMatrix sol(f, 0, cands.size());
  if (cons.rows() == 0) {
    for (std::size_t c = 0; c < cands.size(); ++c) {
      std::vector<Elem> e(cands.size(), 0);
      e[c] = 1;
      sol.append_row(e);
    }
  } else {
    for (const auto& v : null) sol.append_row(v);
    row_reduce(sol);
  }

  auto result = std::make_shared<RRBasis>();
  result->divisor = a;
  for (std::size_t r = 0; r < sol.rows(); ++r) {
    BivariatePoly h(f);
    for (std::size_t c = 0; c < cands.size(); ++c) h.add_term(cands[c], sol(r, c));
    result->basis.emplace_back(*curve_, std::move(h), n);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return bases_.try_emplace(a, std::move(result)).first->second;
}

int RiemannRoch::pole_order(std::size_t k, const FunctionElement& f) const {
  if (f.is_zero()) throw CurveError("pole order of the zero function");
  return std::max(0, -f.valuation(points_.at(k)).value());
}

DivisorVector RiemannRoch::rho(const FunctionElement& f) const {
  if (f.is_zero()) throw CurveError("pole orders of the zero function");
  if (f.valuation(curve_->infinite_place()).value() < 0)
    throw NotInRing("function has a pole at the infinite place (index " +
                        std::to_string(curve_->infinite_place().index) + ")",
                    curve_->infinite_place().index);
  const auto& zeros = curve_->x_zero_places();
  for (std::size_t p = 0; p < zeros.size(); ++p) {
    if (slot_[p] >= 0) continue;
    if (f.valuation(zeros[p]).value() < 0)
      throw NotInRing("function has a pole at unchosen place " + std::to_string(zeros[p].index) + " (" +
                          field().format(zeros[p].x) + ";" + field().format(zeros[p].y) + ")",
                      zeros[p].index);
  }
  DivisorVector r(m());
  for (std::size_t k = 0; k < m(); ++k) r[k] = pole_order(k, f);
  return r;
}

}  // namespace nwc
