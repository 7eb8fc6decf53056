#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hg/catalog/chebyshev.hpp"
#include "hg/catalog/conjugacy.hpp"
#include "hg/catalog/group_table.hpp"
#include "hg/catalog/product.hpp"
#include "hg/catalog/su2_dual.hpp"
#include "hg/catalog/su3_dual.hpp"
#include "hg/errors.hpp"

namespace hg {

// Textual hypergroup selectors:
//   su2dual | su3dual | chebyshev:<d> | conjugacy:<group spec file>
//   | product:<sel>,<sel>[,...]            (factors must not be products)
inline HypergroupPtr parse_selector(const std::string& selector) {
  auto starts_with = [&selector](const char* prefix) {
    return selector.rfind(prefix, 0) == 0;
  };
  if (selector == "su2dual") return build_su2_dual();
  if (selector == "su3dual") return build_su3_dual();
  if (starts_with("chebyshev:")) {
    const std::string arg = selector.substr(10);
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw ParameterError("chebyshev selector needs an integer dimension, got '" +
                           arg + "'");
    }
    return build_chebyshev(d);
  }
  if (starts_with("conjugacy:")) {
    const std::string path = selector.substr(10);
    if (path.empty())
      throw ParameterError("conjugacy selector needs a group spec path");
    return build_conjugacy(generate_group(load_group_spec(path)));
  }
  if (starts_with("product:")) {
    const std::string body = selector.substr(8);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    if (parts.size() < 2)
      throw ParameterError("product selector needs at least two factors");
    std::vector<HypergroupPtr> factors;
    for (const auto& p : parts) {
      if (p.rfind("product:", 0) == 0)
        throw ParameterError("product selectors do not nest");
      factors.push_back(parse_selector(p));
    }
    return build_product(std::move(factors));
  }
  throw ParameterError("unknown hypergroup selector '" + selector + "'");
}

}  // namespace hg
