#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hg/element.hpp"
#include "hg/errors.hpp"
#include "hg/measure.hpp"
#include "hg/numeric.hpp"

namespace hg {

// Discrete commutative hypergroup, presented through integer structure data:
//
//   delta_a * delta_b = sum_c  m(a,b;c) * scale(c) / (den * scale(a) * scale(b)) * delta_c
//
// with m(a,b;c) a positive integer, scale(x) a positive integer weight and
// den a fixed positive integer. Every catalog family fits this shape:
// dual hypergroups of compact groups (den = 1, scale = dimension, m = tensor
// multiplicity), Chebyshev-type polynomial hypergroups (den = 2^d, scale = 1,
// m = number of sign patterns), conjugacy-class hypergroups (den = 1,
// scale = class size, m = class-product count) and finite products of those
// (all data componentwise). Keeping the integer layer explicit lets axiom
// scans run on machine integers while user-facing measures stay exact
// rationals derived from it.
//
// Derived operations (convolve, haar_weight) run through a memoized cache of
// rational measures keyed by unordered pairs; the operation is commutative by
// construction and the cache is what persistence reads and writes.
class Hypergroup {
 public:
  struct Term {
    Element point;
    std::int64_t mult;
  };

  virtual ~Hypergroup() = default;

  Hypergroup(const Hypergroup&) = delete;
  Hypergroup& operator=(const Hypergroup&) = delete;

  const std::string& descriptor() const { return descriptor_; }
  std::uint64_t descriptor_hash() const { return fnv1a64(descriptor_); }
  std::uint32_t instance_id() const { return id_; }
  std::size_t arity() const { return arity_; }
  const Element& identity() const { return identity_; }

  virtual bool contains(const Element& x) const = 0;
  virtual Element involution(const Element& x) const = 0;

  // Integer structure layer. structure_terms may be called with arguments in
  // either order; providers are expected to be symmetric and the axiom
  // verifier checks that they are.
  virtual std::int64_t point_scale(const Element& x) const = 0;
  virtual std::int64_t scale_denominator() const = 0;
  virtual std::vector<Term> structure_terms(const Element& a,
                                            const Element& b) const = 0;

  // Finite truncations: all elements with payload coordinates in [0, bound].
  virtual ElementSet box(std::int64_t bound) const = 0;

  // Canonical generating set used by ball-based truncations and growth scans.
  virtual ElementSet default_generators() const = 0;

  void require_member(const Element& x) const {
    if (x.owner() != id_ || !contains(x))
      throw DomainError("element " + element_string(x) +
                        " is not a point of " + descriptor_);
  }

  // Rational point convolution built from the integer terms, bypassing the
  // cache. The cached path below must agree with this; the axiom verifier
  // re-derives cached entries through here.
  Measure measure_from_terms(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    const Integer den =
        Integer(scale_denominator()) * point_scale(a) * point_scale(b);
    std::map<Element, Rational> acc;
    for (const auto& t : structure_terms(a, b))
      acc[t.point] += make_rational(Integer(t.mult) * point_scale(t.point), den);
    return Measure::from_map(acc);
  }

  // delta_x * delta_y, memoized on the unordered pair {x, y}.
  const Measure& convolve(const Element& x, const Element& y) const {
    require_member(x);
    require_member(y);
    PairKey key = make_key(x, y);
    {
      std::shared_lock lock(cache_mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Measure m = measure_from_terms(key.first, key.second);
    std::unique_lock lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(std::move(key), std::move(m));
    return it->second;
  }

  // Bilinear extension to finitely supported measures.
  Measure convolve(const Measure& mu, const Measure& nu) const {
    std::map<Element, Rational> acc;
    for (const auto& [x, a] : mu.entries())
      for (const auto& [y, b] : nu.entries()) {
        const Rational w = a * b;
        for (const auto& [z, c] : convolve(x, y).entries()) acc[z] += w * c;
      }
    return Measure::from_map(acc);
  }

  // Pushforward under the involution.
  Measure involution(const Measure& mu) const {
    std::map<Element, Rational> acc;
    for (const auto& [x, a] : mu.entries()) acc[involution(x)] += a;
    return Measure::from_map(acc);
  }

  // Haar weight normalized by h(e) = 1, through the inverse structure
  // constant: h(x) = 1 / (delta_x * delta_{x~})({e}). Runs through the
  // cached convolution, so a corrupted cache shows up here too.
  Rational haar_weight(const Element& x) const {
    const Rational c = convolve(x, involution(x)).value_at(identity_);
    if (c == 0)
      throw ValidationError("identity missing from delta_" +
                            element_string(x) + " * delta_" +
                            element_string(involution(x)) + " in " +
                            descriptor_);
    return 1 / c;
  }

  // --- cache plumbing -----------------------------------------------------

  std::size_t cache_size() const {
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
  }

  // Snapshot sorted by key; the persistence layer relies on the order.
  std::vector<std::pair<std::pair<Element, Element>, Measure>>
  cache_snapshot() const {
    std::shared_lock lock(cache_mutex_);
    std::vector<std::pair<std::pair<Element, Element>, Measure>> out(
        cache_.begin(), cache_.end());
    lock.unlock();
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  // Used by cache loading; replaces any existing entry for the pair.
  void cache_inject(const Element& x, const Element& y, Measure m) const {
    require_member(x);
    require_member(y);
    std::unique_lock lock(cache_mutex_);
    cache_.insert_or_assign(make_key(x, y), std::move(m));
  }

  void cache_clear() const {
    std::unique_lock lock(cache_mutex_);
    cache_.clear();
  }

 protected:
  Hypergroup(std::string descriptor, std::size_t arity,
             Element::Coords identity_coords)
      : descriptor_(std::move(descriptor)),
        id_(next_instance_id()),
        arity_(arity),
        identity_(id_, std::move(identity_coords)) {}

  Element make(Element::Coords coords) const {
    return Element(id_, std::move(coords));
  }
  Element make_scalar(std::int64_t v) const { return Element::scalar(id_, v); }

 private:
  using PairKey = std::pair<Element, Element>;

  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
      return static_cast<std::size_t>(k.first.hash() * 0x9e3779b97f4a7c15ull ^
                                      k.second.hash());
    }
  };

  static PairKey make_key(const Element& x, const Element& y) {
    return (y < x) ? PairKey{y, x} : PairKey{x, y};
  }

  static std::uint32_t next_instance_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
  }

  std::string descriptor_;
  std::uint32_t id_;
  std::size_t arity_;
  Element identity_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<PairKey, Measure, PairKeyHash> cache_;
};

using HypergroupPtr = std::shared_ptr<const Hypergroup>;

}  // namespace hg
