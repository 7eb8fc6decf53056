#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "hg/element.hpp"
#include "hg/errors.hpp"
#include "hg/numeric.hpp"

namespace hg {

// Finitely supported measure with exact rational values, stored as a sorted
// flat array with no explicit zeros. Convolution outputs are probability
// measures; nothing here enforces that, verification lives with the axioms.
class Measure {
 public:
  using Entry = std::pair<Element, Rational>;

  Measure() = default;

  static Measure dirac(const Element& x) {
    Measure m;
    m.entries_.emplace_back(x, Rational(1));
    return m;
  }

  static Measure from_map(const std::map<Element, Rational>& values) {
    Measure m;
    m.entries_.reserve(values.size());
    for (const auto& [e, v] : values)
      if (v != 0) m.entries_.emplace_back(e, v);
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Rational* find(const Element& x) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), x,
        [](const Entry& a, const Element& b) { return a.first < b; });
    if (it == entries_.end() || !(it->first == x)) return nullptr;
    return &it->second;
  }

  Rational value_at(const Element& x) const {
    const Rational* v = find(x);
    return v ? *v : Rational(0);
  }

  Rational mass() const {
    Rational s(0);
    for (const auto& [e, v] : entries_) s += v;
    return s;
  }

  bool nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& p) { return p.second >= 0; });
  }

  bool is_probability() const { return nonnegative() && mass() == 1; }

  ElementSet support() const {
    ElementSet s;
    for (const auto& [e, v] : entries_) s.insert(s.end(), e);
    return s;
  }

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Measure& a, const Measure& b) {
    return !(a == b);
  }

 private:
  std::vector<Entry> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Measure& m) {
  os << '{';
  bool first = true;
  for (const auto& [e, v] : m.entries()) {
    if (!first) os << ", ";
    os << e << ": " << v;
    first = false;
  }
  return os << '}';
}

}  // namespace hg
