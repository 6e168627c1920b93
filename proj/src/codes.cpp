#include "nwc/codes.hpp"

#include <set>

namespace nwc {

std::vector<RationalPlace> default_eval_places(const RiemannRoch& rr) {
  std::vector<RationalPlace> out;
  for (const auto& p : rr.curve().places())
    if (p.is_affine() && !rr.is_point(p)) out.push_back(p);
  return out;
}

std::vector<RationalPlace> select_eval_places(const RiemannRoch& rr, const std::vector<std::size_t>& indices) {
  const auto& all = rr.curve().places();
  std::set<std::size_t> seen;
  std::vector<RationalPlace> out;
  for (std::size_t i : indices) {
    if (i >= all.size()) throw std::invalid_argument("place index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) throw std::invalid_argument("place index " + std::to_string(i) + " repeated");
    if (all[i].is_infinite()) throw std::invalid_argument("the infinite place cannot be an evaluation place");
    if (rr.is_point(all[i]))
      throw std::invalid_argument("place " + std::to_string(i) + " is in the divisor support");
    out.push_back(all[i]);
  }
  return out;
}

EvaluationCode build_code(const RiemannRoch& rr, const DivisorVector& a, std::vector<RationalPlace> places) {
  for (const auto& p : places)
    if (p.is_infinite() || rr.is_point(p))
      throw std::invalid_argument("evaluation place " + std::to_string(p.index) + " meets the divisor support");
  const auto basis = rr.basis(a);
  FieldMatrix g(rr.field(), 0, places.size());
  std::vector<Elem> row(places.size());
  for (const auto& f : basis->basis) {
    for (std::size_t j = 0; j < places.size(); ++j) row[j] = f.value_at(places[j]);
    g.append_row(row);
  }
  const std::size_t k = rank(g);
  return EvaluationCode{a, std::move(places), std::move(g), k};
}

namespace {

// Depth-first walk over column subsets in lexicographic order, keeping the
// chosen columns in echelon form so each extension costs one reduction.
class DependentSearch {
 public:
  DependentSearch(const FieldMatrix& g, int size) : g_(g), f_(g.field()), size_(size) {}

  bool run() { return extend(0); }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  struct Reduced {
    std::vector<Elem> v;
    std::size_t pivot;
  };

  std::vector<Elem> column(std::size_t j) const {
    std::vector<Elem> c(g_.rows());
    for (std::size_t r = 0; r < g_.rows(); ++r) c[r] = g_(r, j);
    return c;
  }

  // Returns false when c lies in the span of the current basis.
  bool reduce(std::vector<Elem>& c, std::size_t& pivot) const {
    for (const auto& b : basis_) {
      const Elem x = c[b.pivot];
      if (x == 0) continue;
      for (std::size_t r = 0; r < c.size(); ++r) c[r] = f_.sub(c[r], f_.mul(x, b.v[r]));
    }
    for (std::size_t r = 0; r < c.size(); ++r)
      if (c[r] != 0) {
        const Elem inv = f_.inv(c[r]);
        for (auto& e : c) e = f_.mul(e, inv);
        pivot = r;
        return true;
      }
    return false;
  }

  bool extend(std::size_t start) {
    const std::size_t depth = chosen_.size();
    for (std::size_t j = start; j < g_.cols(); ++j) {
      if (g_.cols() - j < static_cast<std::size_t>(size_) - depth) break;
      std::vector<Elem> c = column(j);
      std::size_t pivot = 0;
      const bool independent = reduce(c, pivot);
      chosen_.push_back(j);
      if (!independent) {
        if (chosen_.size() == static_cast<std::size_t>(size_)) return true;
      } else if (chosen_.size() < static_cast<std::size_t>(size_)) {
        basis_.push_back({std::move(c), pivot});
        if (extend(j + 1)) return true;
        basis_.pop_back();
      }
      chosen_.pop_back();
    }
    return false;
  }

  const FieldMatrix& g_;
  const GaloisField& f_;
  int size_;
  std::vector<Reduced> basis_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

DualDistance dual_min_distance_upto(const EvaluationCode& code, int wmax) {
  DualDistance out;
  for (int w = 1; w <= wmax; ++w) {
    out.searched_upto = w;
    DependentSearch s(code.generator, w);
    if (s.run()) {
      out.distance = w;
      out.witness = s.chosen();
      return out;
    }
  }
  return out;
}

DivisorVector dim_jump_full_rank(const RiemannRoch& rr, const DivisorVector& a,
                                 const std::vector<RationalPlace>& places) {
  DivisorVector b = a;
  std::size_t k = 0;
  while (build_code(rr, b, places).dimension < places.size()) {
    b = b.plus_unit(k);
    k = (k + 1) % b.size();
  }
  return b;
}

}  // namespace nwc
