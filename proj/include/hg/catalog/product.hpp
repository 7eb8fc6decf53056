#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "hg/hypergroup.hpp"

namespace hg {

// Finite direct product of hypergroups: elements are concatenated factor
// payloads, convolution is the tensor of the factor point measures,
// involution and identity act componentwise and h(x_1, ..., x_k) is the
// product of the factor weights. Integer structure data multiplies
// componentwise, so the product stays within the same integer presentation.
class ProductHypergroup final : public Hypergroup {
 public:
  explicit ProductHypergroup(std::vector<HypergroupPtr> factors)
      : Hypergroup(make_descriptor(factors), total_arity(factors),
                   identity_coords(factors)),
        factors_(std::move(factors)) {
    offsets_.reserve(factors_.size() + 1);
    offsets_.push_back(0);
    for (const auto& f : factors_)
      offsets_.push_back(offsets_.back() + f->arity());
  }

  std::size_t factor_count() const { return factors_.size(); }
  const Hypergroup& factor(std::size_t i) const { return *factors_[i]; }

  // Factor i's component of a product element.
  Element project(const Element& x, std::size_t i) const {
    require_member(x);
    Element::Coords c(x.coords().begin() + offsets_[i],
                      x.coords().begin() + offsets_[i + 1]);
    return Element(factors_[i]->instance_id(), std::move(c));
  }

  Element embed(const std::vector<Element>& parts) const {
    if (parts.size() != factors_.size())
      throw ParameterError("product element needs one part per factor");
    Element::Coords c;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      factors_[i]->require_member(parts[i]);
      c.insert(c.end(), parts[i].coords().begin(), parts[i].coords().end());
    }
    return make(std::move(c));
  }

  bool contains(const Element& x) const override {
    if (x.arity() != arity()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Element::Coords c(x.coords().begin() + offsets_[i],
                        x.coords().begin() + offsets_[i + 1]);
      if (!factors_[i]->contains(
              Element(factors_[i]->instance_id(), std::move(c))))
        return false;
    }
    return true;
  }

  Element involution(const Element& x) const override {
    require_member(x);
    Element::Coords c;
    c.reserve(arity());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Element part = factors_[i]->involution(project(x, i));
      c.insert(c.end(), part.coords().begin(), part.coords().end());
    }
    return make(std::move(c));
  }
  using Hypergroup::involution;

  std::int64_t point_scale(const Element& x) const override {
    std::int64_t s = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      s *= factors_[i]->point_scale(project(x, i));
    return s;
  }

  std::int64_t scale_denominator() const override {
    std::int64_t s = 1;
    for (const auto& f : factors_) s *= f->scale_denominator();
    return s;
  }

  std::vector<Term> structure_terms(const Element& a,
                                    const Element& b) const override {
    require_member(a);
    require_member(b);
    std::vector<std::vector<Term>> parts;
    parts.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      parts.push_back(factors_[i]->structure_terms(project(a, i), project(b, i)));
    std::vector<Term> out;
    Element::Coords coords;
    std::vector<std::size_t> pick(factors_.size(), 0);
    while (true) {
      coords.clear();
      std::int64_t mult = 1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const Term& t = parts[i][pick[i]];
        coords.insert(coords.end(), t.point.coords().begin(),
                      t.point.coords().end());
        mult *= t.mult;
      }
      out.push_back({make(coords), mult});
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == parts[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    return out;
  }

  ElementSet box(std::int64_t bound) const override {
    std::vector<ElementSet> factor_boxes;
    factor_boxes.reserve(factors_.size());
    for (const auto& f : factors_) factor_boxes.push_back(f->box(bound));
    ElementSet out;
    std::vector<ElementSet::const_iterator> pick;
    for (const auto& b : factor_boxes) {
      if (b.empty()) return out;
      pick.push_back(b.begin());
    }
    while (true) {
      Element::Coords c;
      for (const auto& it : pick)
        c.insert(c.end(), it->coords().begin(), it->coords().end());
      out.insert(make(std::move(c)));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == factor_boxes[i].end()) {
        pick[i] = factor_boxes[i].begin();
        ++i;
      }
      if (i == pick.size()) break;
    }
    return out;
  }

  // Generators of the product Cayley graph: each factor's generators embedded
  // alongside the other factors' identities.
  ElementSet default_generators() const override {
    ElementSet out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      for (const auto& g : factors_[i]->default_generators()) {
        Element::Coords c;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
          const Element& part = (j == i) ? g : factors_[j]->identity();
          c.insert(c.end(), part.coords().begin(), part.coords().end());
        }
        out.insert(make(std::move(c)));
      }
    }
    return out;
  }

 private:
  static std::string make_descriptor(const std::vector<HypergroupPtr>& fs) {
    if (fs.size() < 2)
      throw ParameterError("product needs at least two factors");
    std::string d = "product(";
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) d += ",";
      d += fs[i]->descriptor();
    }
    return d + ")";
  }

  static std::size_t total_arity(const std::vector<HypergroupPtr>& fs) {
    std::size_t n = 0;
    for (const auto& f : fs) n += f->arity();
    return n;
  }

  static Element::Coords identity_coords(const std::vector<HypergroupPtr>& fs) {
    Element::Coords c;
    for (const auto& f : fs)
      c.insert(c.end(), f->identity().coords().begin(),
               f->identity().coords().end());
    return c;
  }

  std::vector<HypergroupPtr> factors_;
  std::vector<std::size_t> offsets_;
};

inline std::shared_ptr<ProductHypergroup> build_product(
    std::vector<HypergroupPtr> factors) {
  return std::make_shared<ProductHypergroup>(std::move(factors));
}

}  // namespace hg
