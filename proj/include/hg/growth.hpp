#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hg/amenability.hpp"
#include "hg/catalog/product.hpp"
#include "hg/hypergroup.hpp"
#include "hg/ops.hpp"

namespace hg {

// Incremental generator-ball enumeration: ball(0) = {e} and
// ball(n) = ball(n-1) united with supp(ball(n-1) * F). Balls are cached, so
// asking for ball(n) after ball(n-1) costs one expansion step.
class BallScanner {
 public:
  BallScanner(const Hypergroup& H, ElementSet generators)
      : H_(H), generators_(std::move(generators)) {
    for (const auto& g : generators_) H_.require_member(g);
    balls_.push_back(ElementSet{H_.identity()});
  }

  const ElementSet& ball(std::size_t n) {
    while (balls_.size() <= n) {
      const ElementSet& last = balls_.back();
      ElementSet next = last;
      const ElementSet grown = support_product(H_, last, generators_);
      next.insert(grown.begin(), grown.end());
      balls_.push_back(std::move(next));
    }
    return balls_[n];
  }

  ElementSet shell(std::size_t n) {
    if (n == 0) return ball(0);
    const ElementSet& big = ball(n);
    const ElementSet& small = balls_[n - 1];
    ElementSet out;
    for (const auto& x : big)
      if (!small.count(x)) out.insert(x);
    return out;
  }

  const ElementSet& generators() const { return generators_; }

 private:
  const Hypergroup& H_;
  ElementSet generators_;
  std::vector<ElementSet> balls_;
};

inline ElementSet generator_ball(const Hypergroup& H, const ElementSet& F,
                                 std::size_t n) {
  BallScanner scanner(H, F);
  return scanner.ball(n);
}

inline ElementSet generator_shell(const Hypergroup& H, const ElementSet& F,
                                  std::size_t n) {
  BallScanner scanner(H, F);
  return scanner.shell(n);
}

// Exact ball sizes and Haar masses, with h(ball)/n^d for a chosen norm
// exponent d.
struct GrowthReport {
  struct Row {
    std::size_t n;
    std::size_t ball_size;
    Rational haar;
    std::optional<Rational> normalized;  // h / n^d, absent at n = 0
  };
  ElementSet generators;
  unsigned norm_exponent;
  std::vector<Row> rows;
};

inline GrowthReport growth_series(const Hypergroup& H, const ElementSet& F,
                                  std::size_t n_max, unsigned norm_exponent) {
  BallScanner scanner(H, F);
  GrowthReport report;
  report.generators = F;
  report.norm_exponent = norm_exponent;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const ElementSet& B = scanner.ball(n);
    GrowthReport::Row row;
    row.n = n;
    row.ball_size = B.size();
    row.haar = haar_mass(H, B);
    if (n > 0) {
      Integer denom(1);
      for (unsigned i = 0; i < norm_exponent; ++i) denom *= Integer(n);
      row.normalized = row.haar / Rational(denom);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// Closed forms for the ball with respect to both fundamental generators of
// the SU(3) fusion hypergroup. The n-th shell is the tau-level set
// {(p, q) : p + q = n} and carries Haar mass
//   sum_{j=0}^{n} ((j+1)(n-j+1)(n+2)/2)^2.
inline Rational su3_shell_closed_form(std::size_t n) {
  Rational total(0);
  const Integer np2(n + 2);
  for (std::size_t j = 0; j <= n; ++j) {
    const Integer a(j + 1), b(n - j + 1);
    total += Rational(a * a * b * b * np2 * np2) / 4;
  }
  return total;
}

inline Rational su3_ball_closed_form(std::size_t n) {
  const Integer m(n);
  const Integer poly = ((((((Integer(3) * m + 60) * m + 518) * m + 2520) * m +
                          7547) *
                             m +
                         14220) *
                            m +
                        16412) *
                           m +
                       10560;
  return Rational(1) + Rational(m * poly) / 2880;
}

// Eighth-power growth window for the SU(3) ball masses:
// 1/960 < h(ball(n))/n^8 <= 19 for n >= 1, with equality 19 only at n = 1.
// Ball masses are enumerated, not taken from the closed form.
struct Su3BoundsReport {
  struct Row {
    std::size_t n;
    Rational haar;
    Rational normalized;
  };
  std::vector<Row> rows;
  Rational min_normalized;
  Rational max_normalized;
  bool ok = false;
  std::string witness;
};

inline Su3BoundsReport su3_bounds_check(const Hypergroup& H,
                                        std::size_t n_max) {
  if (n_max == 0) throw ParameterError("bounds check needs n_max >= 1");
  const Rational low(1, 960);
  const Rational high(19);
  BallScanner scanner(H, H.default_generators());
  Su3BoundsReport report;
  report.ok = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational haar = haar_mass(H, scanner.ball(n));
    Integer denom(1);
    for (int i = 0; i < 8; ++i) denom *= Integer(n);
    const Rational normalized = haar / Rational(denom);
    if (n == 1) {
      report.min_normalized = normalized;
      report.max_normalized = normalized;
    } else {
      if (normalized < report.min_normalized)
        report.min_normalized = normalized;
      if (normalized > report.max_normalized)
        report.max_normalized = normalized;
    }
    if (report.ok && (normalized <= low || normalized > high)) {
      report.ok = false;
      report.witness = "h(ball(" + std::to_string(n) + "))/n^8 = " +
                       rational_string(normalized) + " leaves (1/960, 19]";
    }
    report.rows.push_back({n, haar, normalized});
  }
  return report;
}

// Leptin ratios h(K * ball(l)) / h(ball(l)) along the generator balls of F,
// after locating the smallest k with K inside ball(k). A supplied target D
// turns the report into a bounded-growth certificate attempt.
struct DLeptinReport {
  std::size_t k_embed = 0;
  struct Row {
    std::size_t l;
    Rational ratio;
  };
  std::vector<Row> rows;
  Rational sup_ratio;
  Rational last_ratio;
  std::optional<Rational> target;
  bool within_target = false;
};

inline DLeptinReport d_leptin_estimate(const Hypergroup& H, const ElementSet& K,
                                       const ElementSet& F, std::size_t l_max,
                                       std::optional<Rational> D = std::nullopt) {
  if (l_max == 0) throw ParameterError("ratio scan needs l_max >= 1");
  if (K.empty()) throw ParameterError("ratio scan needs a nonempty K");
  BallScanner scanner(H, F);
  std::optional<std::size_t> k_embed;
  for (std::size_t k = 0; k <= l_max; ++k) {
    const ElementSet& B = scanner.ball(k);
    if (std::includes(B.begin(), B.end(), K.begin(), K.end())) {
      k_embed = k;
      break;
    }
  }
  if (!k_embed)
    throw ParameterError(
        "K does not embed in any generator ball of radius <= " +
        std::to_string(l_max));
  DLeptinReport report;
  report.k_embed = *k_embed;
  report.target = D;
  for (std::size_t l = 1; l <= l_max; ++l) {
    const Rational ratio = leptin_ratio(H, K, scanner.ball(l)).value;
    if (l == 1) {
      report.sup_ratio = ratio;
    } else if (ratio > report.sup_ratio) {
      report.sup_ratio = ratio;
    }
    report.last_ratio = ratio;
    report.rows.push_back({l, ratio});
  }
  if (D) report.within_target = report.sup_ratio <= *D;
  return report;
}

// Combines per-factor Leptin data into the product hypergroup: with
// K = K_1 x ... x K_m and V = V_1 x ... x V_m the exact product ratio is
// bounded by the product of the factor ratios.
struct ProductLeptinPart {
  HypergroupPtr factor;
  ElementSet K;
  ElementSet V;
};

struct ProductLeptinReport {
  std::shared_ptr<const ProductHypergroup> product;
  ElementSet K;
  ElementSet V;
  Rational ratio;
  std::vector<Rational> factor_ratios;
  Rational bound;
  bool holds = false;
};

inline ProductLeptinReport product_leptin_combine(
    const std::vector<ProductLeptinPart>& parts) {
  if (parts.size() < 2)
    throw ParameterError("product combination needs at least two factors");
  std::vector<HypergroupPtr> factors;
  for (const auto& part : parts) {
    if (!part.factor) throw ParameterError("missing product factor");
    factors.push_back(part.factor);
  }
  auto product = build_product(std::move(factors));

  const auto cartesian = [&](auto pick) {
    ElementSet out;
    std::vector<std::vector<Element>> axes;
    for (const auto& part : parts) {
      const ElementSet& s = pick(part);
      if (s.empty())
        throw ParameterError("product combination needs nonempty factor sets");
      axes.emplace_back(s.begin(), s.end());
    }
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
      std::vector<Element> pieces;
      for (std::size_t i = 0; i < axes.size(); ++i)
        pieces.push_back(axes[i][idx[i]]);
      out.insert(product->embed(pieces));
      std::size_t i = axes.size();
      while (i > 0) {
        --i;
        if (++idx[i] < axes[i].size()) break;
        idx[i] = 0;
        if (i == 0) return out;
      }
    }
  };

  ProductLeptinReport report;
  report.product = product;
  report.K = cartesian([](const ProductLeptinPart& p) -> const ElementSet& {
    return p.K;
  });
  report.V = cartesian([](const ProductLeptinPart& p) -> const ElementSet& {
    return p.V;
  });
  report.ratio = leptin_ratio(*product, report.K, report.V).value;
  report.bound = 1;
  for (const auto& part : parts) {
    const Rational r = leptin_ratio(*part.factor, part.K, part.V).value;
    report.factor_ratios.push_back(r);
    report.bound *= r;
  }
  report.holds = report.ratio <= report.bound;
  return report;
}

}  // namespace hg
