#pragma once

#include <memory>

#include "hg/hypergroup.hpp"

namespace hg {

// Dual hypergroup of SU(2): points are irreducible representations indexed by
// level n >= 0 (dimension n + 1), fusion is the Clebsch-Gordan rule
//
//   delta_m * delta_n = sum_{k = |m-n|, step 2}^{m+n} (k+1)/((m+1)(n+1)) delta_k,
//
// the involution is trivial (every irrep is self-conjugate) and the Haar
// weight is h(n) = (n+1)^2.
class Su2Dual final : public Hypergroup {
 public:
  Su2Dual() : Hypergroup("su2dual", 1, Element::Coords{0}) {}

  bool contains(const Element& x) const override {
    return x.arity() == 1 && x.coord(0) >= 0;
  }

  Element involution(const Element& x) const override {
    require_member(x);
    return x;
  }
  using Hypergroup::involution;

  std::int64_t point_scale(const Element& x) const override {
    return x.coord(0) + 1;
  }

  std::int64_t scale_denominator() const override { return 1; }

  std::vector<Term> structure_terms(const Element& a,
                                    const Element& b) const override {
    require_member(a);
    require_member(b);
    const std::int64_t m = a.coord(0), n = b.coord(0);
    std::vector<Term> out;
    const std::int64_t lo = m > n ? m - n : n - m;
    out.reserve((m + n - lo) / 2 + 1);
    for (std::int64_t k = lo; k <= m + n; k += 2)
      out.push_back({make_scalar(k), 1});
    return out;
  }

  ElementSet box(std::int64_t bound) const override {
    ElementSet s;
    for (std::int64_t n = 0; n <= bound; ++n) s.insert(s.end(), make_scalar(n));
    return s;
  }

  ElementSet default_generators() const override {
    return ElementSet{make_scalar(1)};
  }

  Element level(std::int64_t n) const { return make_scalar(n); }
};

inline std::shared_ptr<Su2Dual> build_su2_dual() {
  return std::make_shared<Su2Dual>();
}

}  // namespace hg
