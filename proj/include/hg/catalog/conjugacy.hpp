#pragma once

#include <memory>
#include <vector>

#include "hg/catalog/group_table.hpp"
#include "hg/hypergroup.hpp"

namespace hg {

// Conjugacy-class hypergroup of a finite group G: points are the conjugacy
// classes, and
//
//   delta_C * delta_D = sum_E  #{(c,d) in C x D : cd in E} / (|C||D|)  delta_E.
//
// The per-class count is |E| times the count against any fixed representative
// z0 of E, so with scale(C) = |C| the integer structure term is
// m(C,D;E) = #{(c,d) : cd = z0}. Involution maps C to the class of inverses;
// the Haar weight is h(C) = |C|. The identity class is numbered 0 and the
// remaining classes are ordered by their minimal group element.
class ConjugacyHypergroup final : public Hypergroup {
 public:
  explicit ConjugacyHypergroup(GroupTable group)
      : Hypergroup(make_descriptor(group), 1, Element::Coords{0}),
        group_(std::move(group)) {
    build_classes();
  }

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::uint32_t>& class_members(std::size_t i) const {
    return classes_[i];
  }
  std::size_t class_size(std::size_t i) const { return classes_[i].size(); }
  const GroupTable& group() const { return group_; }

  bool contains(const Element& x) const override {
    return x.arity() == 1 && x.coord(0) >= 0 &&
           x.coord(0) < static_cast<std::int64_t>(classes_.size());
  }

  Element involution(const Element& x) const override {
    require_member(x);
    return make_scalar(inverse_class_[static_cast<std::size_t>(x.coord(0))]);
  }
  using Hypergroup::involution;

  std::int64_t point_scale(const Element& x) const override {
    return static_cast<std::int64_t>(
        classes_[static_cast<std::size_t>(x.coord(0))].size());
  }

  std::int64_t scale_denominator() const override { return 1; }

  std::vector<Term> structure_terms(const Element& a,
                                    const Element& b) const override {
    require_member(a);
    require_member(b);
    const auto& C = classes_[static_cast<std::size_t>(a.coord(0))];
    const auto& D = classes_[static_cast<std::size_t>(b.coord(0))];
    std::vector<std::int64_t> landed(classes_.size(), 0);
    for (auto c : C)
      for (auto d : D) landed[class_of_[group_.mul(c, d)]] += 1;
    std::vector<Term> out;
    for (std::size_t e = 0; e < classes_.size(); ++e) {
      if (landed[e] == 0) continue;
      const auto size = static_cast<std::int64_t>(classes_[e].size());
      if (landed[e] % size != 0)
        throw ValidationError("class product count not divisible by |class| in " +
                              descriptor());
      out.push_back({make_scalar(static_cast<std::int64_t>(e)),
                     landed[e] / size});
    }
    return out;
  }

  // All classes; the class set is finite, so the bound is ignored.
  ElementSet box(std::int64_t) const override {
    ElementSet s;
    for (std::size_t i = 0; i < classes_.size(); ++i)
      s.insert(s.end(), make_scalar(static_cast<std::int64_t>(i)));
    return s;
  }

  ElementSet default_generators() const override {
    ElementSet s;
    for (std::size_t i = 1; i < classes_.size(); ++i)
      s.insert(s.end(), make_scalar(static_cast<std::int64_t>(i)));
    return s;
  }

  Element class_element(std::size_t i) const {
    Element e = make_scalar(static_cast<std::int64_t>(i));
    require_member(e);
    return e;
  }

 private:
  static std::string make_descriptor(const GroupTable& g) {
    return "conjugacy:" + g.name() + ":o" + std::to_string(g.order()) + ":" +
           hex64(g.fingerprint());
  }

  void build_classes() {
    const std::size_t n = group_.order();
    class_of_.assign(n, 0);
    std::vector<bool> seen(n, false);
    // Identity sits in the singleton class {e}; renumber so it comes first
    // even if the table's identity is not element 0.
    std::vector<std::uint32_t> scan_order;
    scan_order.push_back(group_.identity());
    for (std::uint32_t x = 0; x < n; ++x)
      if (x != group_.identity()) scan_order.push_back(x);
    for (std::uint32_t x : scan_order) {
      if (seen[x]) continue;
      std::vector<std::uint32_t> members;
      for (std::uint32_t g = 0; g < n; ++g) {
        std::uint32_t y = group_.mul(group_.mul(g, x), group_.inv(g));
        if (!seen[y]) {
          seen[y] = true;
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      const auto idx = static_cast<std::uint32_t>(classes_.size());
      for (auto m : members) class_of_[m] = idx;
      classes_.push_back(std::move(members));
    }
    inverse_class_.resize(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i)
      inverse_class_[i] = class_of_[group_.inv(classes_[i].front())];
  }

  GroupTable group_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_class_;
};

inline std::shared_ptr<ConjugacyHypergroup> build_conjugacy(GroupTable group) {
  return std::make_shared<ConjugacyHypergroup>(std::move(group));
}

}  // namespace hg
