#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <set>
#include <sstream>

#include "hg/numeric.hpp"

namespace hg {

// A point of a hypergroup: the owning instance id plus an integer payload.
// Payload shape is fixed per hypergroup (length 1 for SU(2)^ levels,
// Chebyshev d=1 indices and conjugacy-class ids; length 2 for SU(3)^ highest
// weights; concatenated coordinates for products). Two elements are equal iff
// owner and payload agree; ordering is owner, then lexicographic payload.
class Element {
 public:
  using Coords = boost::container::small_vector<std::int64_t, 4>;

  Element() = default;
  Element(std::uint32_t owner, Coords coords)
      : owner_(owner), coords_(std::move(coords)) {}

  static Element scalar(std::uint32_t owner, std::int64_t v) {
    return Element(owner, Coords{v});
  }

  std::uint32_t owner() const { return owner_; }
  const Coords& coords() const { return coords_; }
  std::size_t arity() const { return coords_.size(); }
  std::int64_t coord(std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.owner_ == b.owner_ && a.coords_ == b.coords_;
  }

  friend bool operator<(const Element& a, const Element& b) {
    if (a.owner_ != b.owner_) return a.owner_ < b.owner_;
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                        b.coords_.begin(), b.coords_.end());
  }
  friend bool operator>(const Element& a, const Element& b) { return b < a; }
  friend bool operator<=(const Element& a, const Element& b) { return !(b < a); }
  friend bool operator>=(const Element& a, const Element& b) { return !(a < b); }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::uint64_t hash() const {
    std::uint64_t h = fnv1a64("el");
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
      }
    };
    mix(owner_);
    for (auto c : coords_) mix(static_cast<std::uint64_t>(c));
    return h;
  }

 private:
  std::uint32_t owner_ = 0;
  Coords coords_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    return static_cast<std::size_t>(e.hash());
  }
};

using ElementSet = std::set<Element>;

// Scalars render bare ("3"); longer payloads render as tuples ("(1,0)").
inline std::ostream& operator<<(std::ostream& os, const Element& e) {
  if (e.arity() == 1) return os << e.coord(0);
  os << '(';
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (i) os << ',';
    os << e.coord(i);
  }
  return os << ')';
}

inline std::string element_string(const Element& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

inline std::string set_string(const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& e : s) {
    if (!first) os << ", ";
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace hg
