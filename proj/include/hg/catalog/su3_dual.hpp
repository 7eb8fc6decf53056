#pragma once

#include <memory>

#include "hg/catalog/su3_fusion.hpp"
#include "hg/hypergroup.hpp"

namespace hg {

// Dual hypergroup of SU(3): points are Dynkin pairs (p, q), fusion carries
// the tensor multiplicities weighted by dimension,
//
//   delta_pi1 * delta_pi2 = sum_i  m_i d_i / (d_pi1 d_pi2) delta_i,
//
// the involution is conjugation (p, q) -> (q, p) and h(pi) = d_pi^2.
class Su3Dual final : public Hypergroup {
 public:
  Su3Dual() : Hypergroup("su3dual", 2, Element::Coords{0, 0}) {}

  bool contains(const Element& x) const override {
    return x.arity() == 2 && x.coord(0) >= 0 && x.coord(1) >= 0;
  }

  Element involution(const Element& x) const override {
    require_member(x);
    return make(Element::Coords{x.coord(1), x.coord(0)});
  }
  using Hypergroup::involution;

  std::int64_t point_scale(const Element& x) const override {
    return su3_dimension(x.coord(0), x.coord(1));
  }

  std::int64_t scale_denominator() const override { return 1; }

  std::vector<Term> structure_terms(const Element& a,
                                    const Element& b) const override {
    require_member(a);
    require_member(b);
    auto parts =
        su3_tensor_decompose(a.coord(0), a.coord(1), b.coord(0), b.coord(1));
    std::vector<Term> out;
    out.reserve(parts.size());
    for (const auto& c : parts)
      out.push_back({make(Element::Coords{c.p, c.q}), c.mult});
    return out;
  }

  ElementSet box(std::int64_t bound) const override {
    ElementSet s;
    for (std::int64_t p = 0; p <= bound; ++p)
      for (std::int64_t q = 0; q <= bound; ++q)
        s.insert(make(Element::Coords{p, q}));
    return s;
  }

  // Fundamental and anti-fundamental representations.
  ElementSet default_generators() const override {
    return ElementSet{make(Element::Coords{1, 0}), make(Element::Coords{0, 1})};
  }

  Element weight(std::int64_t p, std::int64_t q) const {
    return make(Element::Coords{p, q});
  }

  // tau-level set {(p, q) : p + q = k}; these are exactly the spheres of the
  // generator set {(1,0), (0,1)}.
  ElementSet level_set(std::int64_t k) const {
    ElementSet s;
    for (std::int64_t p = 0; p <= k; ++p)
      s.insert(make(Element::Coords{p, k - p}));
    return s;
  }
};

inline std::shared_ptr<Su3Dual> build_su3_dual() {
  return std::make_shared<Su3Dual>();
}

}  // namespace hg
