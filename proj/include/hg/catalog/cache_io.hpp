#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hg/hypergroup.hpp"

namespace hg {

// Persistent structure-constant cache. The on-disk format is JSON with a
// version tag, the producing descriptor plus its hash, and records sorted by
// the (x, y) key; rationals are stored as decimal-string numerator and
// denominator pairs so round-trips are bit-exact at any precision.
//
//   { "format": "hg-cache", "version": 1,
//     "descriptor": "...", "descriptor_hash": "16-hex",
//     "records": [ {"x": [..], "y": [..],
//                   "terms": [[[coords], "num", "den"], ...]}, ... ] }

inline constexpr int kCacheFormatVersion = 1;

struct StructureCache {
  int version = 0;
  std::string descriptor;
  std::string descriptor_hash;
  struct Record {
    std::vector<std::int64_t> x, y;
    std::vector<std::pair<std::vector<std::int64_t>, std::pair<std::string, std::string>>>
        terms;
  };
  std::vector<Record> records;
};

inline void cache_store(const Hypergroup& H, const std::string& path) {
  auto snapshot = H.cache_snapshot();
  if (snapshot.empty())
    throw ParameterError("structure cache for " + H.descriptor() +
                         " is empty; nothing to store");
  nlohmann::ordered_json j;
  j["format"] = "hg-cache";
  j["version"] = kCacheFormatVersion;
  j["descriptor"] = H.descriptor();
  j["descriptor_hash"] = hex64(H.descriptor_hash());
  auto records = nlohmann::ordered_json::array();
  for (const auto& [key, measure] : snapshot) {
    nlohmann::ordered_json rec;
    rec["x"] = std::vector<std::int64_t>(key.first.coords().begin(),
                                         key.first.coords().end());
    rec["y"] = std::vector<std::int64_t>(key.second.coords().begin(),
                                         key.second.coords().end());
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [point, value] : measure.entries()) {
      terms.push_back({std::vector<std::int64_t>(point.coords().begin(),
                                                 point.coords().end()),
                       numerator(value).str(), denominator(value).str()});
    }
    rec["terms"] = std::move(terms);
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  std::ofstream out(path);
  if (!out) throw CacheError("cannot write cache file " + path);
  out << j.dump(1) << "\n";
}

inline StructureCache cache_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("cache file " + path + " is corrupt: " + e.what());
  }
  StructureCache cache;
  try {
    if (j.at("format").get<std::string>() != "hg-cache")
      throw CacheError("cache file " + path + " has the wrong format tag");
    cache.version = j.at("version").get<int>();
    cache.descriptor = j.at("descriptor").get<std::string>();
    cache.descriptor_hash = j.at("descriptor_hash").get<std::string>();
    for (const auto& rec : j.at("records")) {
      StructureCache::Record r;
      r.x = rec.at("x").get<std::vector<std::int64_t>>();
      r.y = rec.at("y").get<std::vector<std::int64_t>>();
      for (const auto& term : rec.at("terms")) {
        if (!term.is_array() || term.size() != 3)
          throw CacheError("cache file " + path + " has a malformed term");
        r.terms.emplace_back(
            term.at(0).get<std::vector<std::int64_t>>(),
            std::make_pair(term.at(1).get<std::string>(),
                           term.at(2).get<std::string>()));
      }
      cache.records.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("cache file " + path + " is corrupt: " + e.what());
  }
  return cache;
}

// Validates a parsed cache against H and injects its records. Rationals are
// reconstructed exactly; semantic health of injected entries is the axiom
// verifier's job, not the loader's.
inline std::size_t cache_apply(const Hypergroup& H,
                               const StructureCache& cache) {
  if (cache.version != kCacheFormatVersion)
    throw CacheError("cache version " + std::to_string(cache.version) +
                     " does not match supported version " +
                     std::to_string(kCacheFormatVersion));
  if (cache.descriptor != H.descriptor())
    throw CacheError("cache descriptor '" + cache.descriptor +
                     "' does not match hypergroup '" + H.descriptor() + "'");
  if (cache.descriptor_hash != hex64(H.descriptor_hash()))
    throw CacheError("cache descriptor hash mismatch for " + H.descriptor());
  std::size_t applied = 0;
  for (const auto& rec : cache.records) {
    Element x(H.instance_id(), Element::Coords(rec.x.begin(), rec.x.end()));
    Element y(H.instance_id(), Element::Coords(rec.y.begin(), rec.y.end()));
    if (!H.contains(x) || !H.contains(y))
      throw CacheError("cache record key outside hypergroup " + H.descriptor());
    std::map<Element, Rational> values;
    for (const auto& [coords, num_den] : rec.terms) {
      Element p(H.instance_id(),
                Element::Coords(coords.begin(), coords.end()));
      if (!H.contains(p))
        throw CacheError("cache record term outside hypergroup " +
                         H.descriptor());
      try {
        values[p] = parse_rational(num_den.first, num_den.second);
      } catch (const ValidationError& e) {
        throw CacheError(std::string("cache record has a bad rational: ") +
                         e.what());
      }
    }
    H.cache_inject(x, y, Measure::from_map(values));
    ++applied;
  }
  return applied;
}

inline std::size_t cache_load(const Hypergroup& H, const std::string& path) {
  return cache_apply(H, cache_read(path));
}

}  // namespace hg
