#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "hg/element.hpp"
#include "hg/measure.hpp"
#include "hg/numeric.hpp"

namespace hg {

// Finitely supported rational-valued function. Values may be negative (these
// carry Reiter differences L_x f - f as well as certificates); exact zeros
// are dropped so support() is the true support.
class FiniteFunction {
 public:
  using Entry = std::pair<Element, Rational>;

  FiniteFunction() = default;

  static FiniteFunction from_map(const std::map<Element, Rational>& values) {
    FiniteFunction f;
    f.entries_.reserve(values.size());
    for (const auto& [e, v] : values)
      if (v != 0) f.entries_.emplace_back(e, v);
    return f;
  }

  static FiniteFunction indicator(const ElementSet& s) {
    FiniteFunction f;
    f.entries_.reserve(s.size());
    for (const auto& e : s) f.entries_.emplace_back(e, Rational(1));
    return f;
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

  bool nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& p) { return p.second >= 0; });
  }

  ElementSet support() const {
    ElementSet s;
    for (const auto& [e, v] : entries_) s.insert(s.end(), e);
    return s;
  }

  FiniteFunction scaled(const Rational& c) const {
    if (c == 0) return FiniteFunction();
    FiniteFunction f;
    f.entries_.reserve(entries_.size());
    for (const auto& [e, v] : entries_) f.entries_.emplace_back(e, c * v);
    return f;
  }

  friend FiniteFunction operator+(const FiniteFunction& a,
                                  const FiniteFunction& b) {
    std::map<Element, Rational> acc;
    for (const auto& [e, v] : a.entries_) acc[e] += v;
    for (const auto& [e, v] : b.entries_) acc[e] += v;
    return from_map(acc);
  }

  friend FiniteFunction operator-(const FiniteFunction& a,
                                  const FiniteFunction& b) {
    std::map<Element, Rational> acc;
    for (const auto& [e, v] : a.entries_) acc[e] += v;
    for (const auto& [e, v] : b.entries_) acc[e] -= v;
    return from_map(acc);
  }

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const FiniteFunction& a, const FiniteFunction& b) {
    return !(a == b);
  }

 private:
  std::vector<Entry> entries_;
};

// Pairing of a measure against a function: mu(f) = sum_z mu({z}) f(z).
inline Rational pair_measure(const Measure& mu, const FiniteFunction& f) {
  Rational s(0);
  const auto& me = mu.entries();
  const auto& fe = f.entries();
  std::size_t i = 0, j = 0;
  while (i < me.size() && j < fe.size()) {
    if (me[i].first < fe[j].first) {
      ++i;
    } else if (fe[j].first < me[i].first) {
      ++j;
    } else {
      s += me[i].second * fe[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const FiniteFunction& f) {
  os << '{';
  bool first = true;
  for (const auto& [e, v] : f.entries()) {
    if (!first) os << ", ";
    os << e << ": " << v;
    first = false;
  }
  return os << '}';
}

}  // namespace hg
