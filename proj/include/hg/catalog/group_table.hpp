#pragma once

#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hg/errors.hpp"
#include "hg/numeric.hpp"

namespace hg {

// A finite group presented either by permutation generators (one-line images
// over {0..degree-1}) or by an explicit Cayley table.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;
  std::size_t element_count = 0;
  std::vector<std::vector<std::uint32_t>> cayley;

  bool has_table() const { return !cayley.empty(); }
};

// Multiplication table of a finite group with deterministic numbering:
// identity is element 0; generated groups number elements in breadth-first
// order from the identity, table-backed groups keep the file order.
class GroupTable {
 public:
  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[a * order_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t identity() const { return identity_; }

  // Stable content fingerprint: hashes the full multiplication table, so two
  // specs producing the same numbered table agree.
  std::uint64_t fingerprint() const {
    std::string bytes;
    bytes.reserve(table_.size() * 4);
    for (std::uint32_t v : table_)
      for (int i = 0; i < 4; ++i)
        bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    return fnv1a64(bytes);
  }

  static GroupTable generate(const GroupSpec& spec,
                             std::size_t order_cap = 100000) {
    if (spec.has_table()) return from_table(spec);
    return from_generators(spec, order_cap);
  }

 private:
  GroupTable() = default;

  static GroupTable from_generators(const GroupSpec& spec,
                                    std::size_t order_cap) {
    const std::size_t deg = spec.degree;
    if (deg == 0)
      throw ValidationError("group spec needs a positive degree");
    for (const auto& g : spec.generators) {
      if (g.size() != deg)
        throw ValidationError("generator arity does not match degree in " +
                              spec.name);
      std::vector<bool> seen(deg, false);
      for (auto v : g) {
        if (v >= deg || seen[v])
          throw ValidationError("generator is not a permutation in " +
                                spec.name);
        seen[v] = true;
      }
    }

    using Perm = std::vector<std::uint32_t>;
    Perm id(deg);
    for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<std::uint32_t>(i);

    std::map<Perm, std::uint32_t> index;
    std::vector<Perm> elems;
    std::deque<std::uint32_t> queue;
    index.emplace(id, 0);
    elems.push_back(id);
    queue.push_back(0);
    auto compose = [deg](const Perm& a, const Perm& b) {
      Perm c(deg);
      for (std::size_t i = 0; i < deg; ++i) c[i] = a[b[i]];
      return c;
    };
    while (!queue.empty()) {
      const std::uint32_t cur = queue.front();
      queue.pop_front();
      for (const auto& g : spec.generators) {
        Perm next = compose(elems[cur], g);
        if (index.emplace(next, static_cast<std::uint32_t>(elems.size()))
                .second) {
          if (elems.size() >= order_cap)
            throw ValidationError("group order cap exceeded for " + spec.name);
          elems.push_back(std::move(next));
          queue.push_back(static_cast<std::uint32_t>(elems.size() - 1));
        }
      }
    }

    GroupTable t;
    t.name_ = spec.name;
    t.order_ = elems.size();
    t.identity_ = 0;
    t.table_.resize(t.order_ * t.order_);
    for (std::size_t a = 0; a < t.order_; ++a)
      for (std::size_t b = 0; b < t.order_; ++b) {
        Perm p = compose(elems[a], elems[b]);
        t.table_[a * t.order_ + b] = index.at(p);
      }
    t.fill_inverses();
    return t;
  }

  static GroupTable from_table(const GroupSpec& spec) {
    const std::size_t n =
        spec.element_count ? spec.element_count : spec.cayley.size();
    if (n == 0 || spec.cayley.size() != n)
      throw ValidationError("cayley table must be a nonempty square matrix");
    for (const auto& row : spec.cayley)
      if (row.size() != n)
        throw ValidationError("cayley table must be square in " + spec.name);

    GroupTable t;
    t.name_ = spec.name;
    t.order_ = n;
    t.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::uint32_t v = spec.cayley[a][b];
        if (v >= n)
          throw ValidationError("cayley entry out of range in " + spec.name);
        t.table_[a * n + b] = v;
      }

    // Latin square: every row and column is a permutation.
    std::vector<bool> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[t.mul(a, b)])
          throw ValidationError("cayley row " + std::to_string(a) +
                                " is not a permutation in " + spec.name);
        seen[t.mul(a, b)] = true;
      }
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[t.mul(b, a)])
          throw ValidationError("cayley column " + std::to_string(a) +
                                " is not a permutation in " + spec.name);
        seen[t.mul(b, a)] = true;
      }
    }

    // Two-sided identity, inferred from the table.
    std::size_t e = n;
    for (std::size_t a = 0; a < n; ++a) {
      bool ok = true;
      for (std::size_t b = 0; b < n && ok; ++b)
        ok = t.mul(static_cast<std::uint32_t>(a),
                   static_cast<std::uint32_t>(b)) == b &&
             t.mul(static_cast<std::uint32_t>(b),
                   static_cast<std::uint32_t>(a)) == b;
      if (ok) {
        e = a;
        break;
      }
    }
    if (e == n) throw ValidationError("cayley table has no identity in " + spec.name);
    t.identity_ = static_cast<std::uint32_t>(e);

    // Associativity, the expensive part of validating an explicit table.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (t.mul(t.mul(static_cast<std::uint32_t>(a),
                          static_cast<std::uint32_t>(b)),
                    static_cast<std::uint32_t>(c)) !=
              t.mul(static_cast<std::uint32_t>(a),
                    t.mul(static_cast<std::uint32_t>(b),
                          static_cast<std::uint32_t>(c))))
            throw ValidationError(
                "cayley table is not associative in " + spec.name + " at (" +
                std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")");

    t.fill_inverses();
    return t;
  }

  void fill_inverses() {
    inverse_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < order_; ++b)
        if (mul(static_cast<std::uint32_t>(a),
                static_cast<std::uint32_t>(b)) == identity_ &&
            mul(static_cast<std::uint32_t>(b),
                static_cast<std::uint32_t>(a)) == identity_) {
          inverse_[a] = static_cast<std::uint32_t>(b);
          found = true;
          break;
        }
      if (!found)
        throw ValidationError("element " + std::to_string(a) +
                              " has no inverse in " + name_);
    }
  }

  std::string name_;
  std::size_t order_ = 0;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

inline GroupSpec parse_group_spec(const nlohmann::json& j,
                                  const std::string& origin) {
  GroupSpec spec;
  try {
    spec.name = j.value("name", std::string("unnamed"));
    if (j.contains("generators")) {
      spec.degree = j.at("degree").get<std::size_t>();
      spec.generators =
          j.at("generators").get<std::vector<std::vector<std::uint32_t>>>();
    } else if (j.contains("cayley")) {
      if (j.contains("elements")) {
        if (j.at("elements").is_number())
          spec.element_count = j.at("elements").get<std::size_t>();
        else
          spec.element_count = j.at("elements").size();
      }
      spec.cayley =
          j.at("cayley").get<std::vector<std::vector<std::uint32_t>>>();
    } else {
      throw LoadError("group spec " + origin +
                      " needs either generators or a cayley table");
    }
  } catch (const nlohmann::json::exception& e) {
    throw LoadError("group spec " + origin + " is malformed: " + e.what());
  }
  return spec;
}

inline GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open group spec " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError("group spec " + path + " is not valid JSON: " + e.what());
  }
  return parse_group_spec(j, path);
}

inline GroupTable generate_group(const GroupSpec& spec,
                                 std::size_t order_cap = 100000) {
  return GroupTable::generate(spec, order_cap);
}

}  // namespace hg
