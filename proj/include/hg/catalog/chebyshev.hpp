#pragma once

#include <map>
#include <memory>
#include <string>

#include "hg/hypergroup.hpp"

namespace hg {

// Multivariable Chebyshev hypergroup on N^d:
//
//   delta_n * delta_m = 2^{-d} sum over sign patterns delta_{(|n_1 +- m_1|, ...)},
//
// identity involution, h(x) = 2^{#nonzero coordinates of x} (each away-from-
// boundary coordinate doubles the weight). Coordinates collapse under | |, so
// distinct sign patterns can land on the same point; the structure term
// records how many do.
class Chebyshev final : public Hypergroup {
 public:
  explicit Chebyshev(int d)
      : Hypergroup("chebyshev:" + std::to_string(d), static_cast<std::size_t>(check_dim(d)),
                   Element::Coords(static_cast<std::size_t>(d), 0)),
        d_(d) {}

  bool contains(const Element& x) const override {
    if (x.arity() != static_cast<std::size_t>(d_)) return false;
    for (std::size_t i = 0; i < x.arity(); ++i)
      if (x.coord(i) < 0) return false;
    return true;
  }

  Element involution(const Element& x) const override {
    require_member(x);
    return x;
  }
  using Hypergroup::involution;

  std::int64_t point_scale(const Element&) const override { return 1; }

  std::int64_t scale_denominator() const override {
    return std::int64_t(1) << d_;
  }

  std::vector<Term> structure_terms(const Element& a,
                                    const Element& b) const override {
    require_member(a);
    require_member(b);
    std::map<Element::Coords, std::int64_t> acc;
    Element::Coords target(static_cast<std::size_t>(d_), 0);
    const std::uint64_t patterns = std::uint64_t(1) << d_;
    for (std::uint64_t s = 0; s < patterns; ++s) {
      for (int i = 0; i < d_; ++i) {
        const std::int64_t v = (s >> i) & 1 ? a.coord(i) - b.coord(i)
                                            : a.coord(i) + b.coord(i);
        target[static_cast<std::size_t>(i)] = v < 0 ? -v : v;
      }
      acc[target] += 1;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [c, m] : acc) out.push_back({make(c), m});
    return out;
  }

  ElementSet box(std::int64_t bound) const override {
    ElementSet s;
    Element::Coords c(static_cast<std::size_t>(d_), 0);
    fill_box(s, c, 0, bound);
    return s;
  }

  ElementSet default_generators() const override {
    ElementSet s;
    for (int i = 0; i < d_; ++i) {
      Element::Coords c(static_cast<std::size_t>(d_), 0);
      c[static_cast<std::size_t>(i)] = 1;
      s.insert(make(std::move(c)));
    }
    return s;
  }

  int dims() const { return d_; }

  Element point(Element::Coords c) const {
    Element e = make(std::move(c));
    require_member(e);
    return e;
  }

 private:
  static int check_dim(int d) {
    if (d < 1) throw ParameterError("chebyshev dimension must be >= 1");
    if (d > 20)
      throw ParameterError("chebyshev dimension above 20 is not supported");
    return d;
  }

  void fill_box(ElementSet& s, Element::Coords& c, std::size_t i,
                std::int64_t bound) const {
    if (i == c.size()) {
      s.insert(make(c));
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      c[i] = v;
      fill_box(s, c, i + 1, bound);
    }
    c[i] = 0;
  }

  int d_;
};

inline std::shared_ptr<Chebyshev> build_chebyshev(int d) {
  return std::make_shared<Chebyshev>(d);
}

}  // namespace hg
