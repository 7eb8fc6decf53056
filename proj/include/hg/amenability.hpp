#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hg/finite_function.hpp"
#include "hg/hypergroup.hpp"
#include "hg/ops.hpp"

namespace hg {

enum class RatioKind { Leptin, FolnerPointwise, StrongFolner };

inline const char* ratio_kind_name(RatioKind k) {
  switch (k) {
    case RatioKind::Leptin:
      return "leptin";
    case RatioKind::FolnerPointwise:
      return "folner-pointwise";
    case RatioKind::StrongFolner:
      return "strong-folner";
  }
  return "?";
}

struct RatioReport {
  RatioKind kind;
  ElementSet K;
  ElementSet V;
  Rational value;

  std::string decimal(int digits = 6) const { return to_decimal(value, digits); }
};

// h(K*V) / h(V).
inline RatioReport leptin_ratio(const Hypergroup& H, const ElementSet& K,
                                const ElementSet& V) {
  if (V.empty()) throw ParameterError("leptin ratio needs a nonempty V");
  const Rational ratio =
      haar_mass(H, support_product(H, K, V)) / haar_mass(H, V);
  return {RatioKind::Leptin, K, V, ratio};
}

namespace detail {
inline Rational symmetric_difference_ratio(const Hypergroup& H,
                                           const ElementSet& K,
                                           const ElementSet& V) {
  const ElementSet KV = support_product(H, K, V);
  Rational diff(0);
  for (const auto& x : KV)
    if (!V.count(x)) diff += H.haar_weight(x);
  for (const auto& x : V)
    if (!KV.count(x)) diff += H.haar_weight(x);
  return diff / haar_mass(H, V);
}
}  // namespace detail

// h(x*V (symmetric difference) V) / h(V).
inline RatioReport folner_ratio(const Hypergroup& H, const Element& x,
                                const ElementSet& V) {
  if (V.empty()) throw ParameterError("folner ratio needs a nonempty V");
  H.require_member(x);
  const ElementSet K{x};
  return {RatioKind::FolnerPointwise, K, V,
          detail::symmetric_difference_ratio(H, K, V)};
}

// h(K*V (symmetric difference) V) / h(V).
inline RatioReport strong_folner_ratio(const Hypergroup& H, const ElementSet& K,
                                       const ElementSet& V) {
  if (V.empty()) throw ParameterError("strong folner ratio needs a nonempty V");
  return {RatioKind::StrongFolner, K, V,
          detail::symmetric_difference_ratio(H, K, V)};
}

// The strong-Folner-implies-Leptin inequality
// h(K*V)/h(V) - 1 <= h(K*V sym.diff. V)/h(V), checked exactly.
struct SfImpliesLReport {
  Rational leptin_minus_one;
  Rational strong_folner;
  bool holds = false;
};

inline SfImpliesLReport check_sf_implies_l(const Hypergroup& H,
                                           const ElementSet& K,
                                           const ElementSet& V) {
  SfImpliesLReport r;
  r.leptin_minus_one = leptin_ratio(H, K, V).value - 1;
  r.strong_folner = strong_folner_ratio(H, K, V).value;
  r.holds = r.leptin_minus_one <= r.strong_folner;
  return r;
}

// Minimizes the Leptin ratio over an indexed family of candidate sets,
// deterministically preferring the smallest index among equal ratios. When a
// target D is supplied, the result is "certified" if the best ratio is below
// D + eps.
struct LeptinSearchResult {
  std::size_t best_index = 0;
  ElementSet best_V;
  Rational best_ratio;
  std::size_t tried = 0;
  bool certified = false;
  std::optional<Rational> target;
};

using SetFamily = std::function<ElementSet(std::size_t)>;

inline LeptinSearchResult leptin_search(
    const Hypergroup& H, const ElementSet& K, const SetFamily& family,
    std::size_t budget, std::optional<Rational> D = std::nullopt,
    Rational eps = Rational(0)) {
  if (budget == 0) throw ParameterError("leptin search needs a positive budget");
  LeptinSearchResult result;
  result.target = D;
  bool have = false;
  for (std::size_t n = 1; n <= budget; ++n) {
    ElementSet V = family(n);
    if (V.empty())
      throw ParameterError("candidate family produced an empty set at index " +
                           std::to_string(n));
    const Rational ratio = leptin_ratio(H, K, V).value;
    ++result.tried;
    if (!have || ratio < result.best_ratio) {
      have = true;
      result.best_index = n;
      result.best_V = std::move(V);
      result.best_ratio = ratio;
    }
  }
  if (D) result.certified = result.best_ratio < *D + eps;
  return result;
}

// Per-k Folner ratio sequences along an increasing family A_n. Nesting
// violations are reported, not thrown.
struct SummingReport {
  struct Track {
    Element k;
    std::vector<Rational> ratios;
  };
  std::vector<Track> tracks;
  bool nested = true;
  std::string nesting_witness;
};

inline SummingReport summing_sequence_check(const Hypergroup& H,
                                            const SetFamily& family,
                                            const ElementSet& ks,
                                            std::size_t n_max) {
  if (n_max == 0) throw ParameterError("summing check needs n_max >= 1");
  SummingReport report;
  for (const auto& k : ks) report.tracks.push_back({k, {}});
  ElementSet prev;
  for (std::size_t n = 1; n <= n_max; ++n) {
    ElementSet A = family(n);
    if (A.empty())
      throw ParameterError("summing family produced an empty set at index " +
                           std::to_string(n));
    if (n > 1 && report.nested &&
        !std::includes(A.begin(), A.end(), prev.begin(), prev.end())) {
      report.nested = false;
      report.nesting_witness =
          "A_" + std::to_string(n - 1) + " is not contained in A_" +
          std::to_string(n);
    }
    for (auto& track : report.tracks)
      track.ratios.push_back(folner_ratio(H, track.k, A).value);
    prev = std::move(A);
  }
  return report;
}

// A Reiter test vector in ell^r(H, h). For r = 2 the normalization constant
// is tracked as an exact square: the actual vector is sqrt(scale_sq) * base,
// so every deficiency computation below stays rational.
struct ReiterWitness {
  int r = 1;
  FiniteFunction base;
  Rational scale_sq = 1;
};

inline ReiterWitness folner_to_reiter(const Hypergroup& H, const ElementSet& V,
                                      int r) {
  if (V.empty()) throw ParameterError("reiter witness needs a nonempty V");
  if (r != 1 && r != 2) throw ParameterError("reiter exponent must be 1 or 2");
  const Rational hv = haar_mass(H, V);
  ReiterWitness w;
  w.r = r;
  if (r == 1) {
    w.base = FiniteFunction::indicator(V).scaled(1 / hv);
    w.scale_sq = 1;
  } else {
    w.base = FiniteFunction::indicator(V);
    w.scale_sq = 1 / hv;
  }
  return w;
}

// max over x in E of ||L_x f - f||_r; exact for r = 1, exact square for r = 2.
struct ReiterReport {
  int r = 1;
  ElementSet E;
  Rational deficiency;  // the norm itself for r = 1, its square for r = 2
  bool squared = false;

  std::string decimal(int digits = 6) const {
    return squared ? sqrt_decimal(deficiency, digits)
                   : to_decimal(deficiency, digits);
  }
};

inline ReiterReport reiter_deficiency(const Hypergroup& H,
                                      const ReiterWitness& witness,
                                      const ElementSet& E) {
  if (witness.r != 1 && witness.r != 2)
    throw ParameterError("reiter exponent must be 1 or 2");
  if (!witness.base.nonnegative())
    throw ParameterError("reiter witness must be nonnegative");
  if (witness.r == 1) {
    if (witness.scale_sq != 1)
      throw ParameterError("r=1 witness must carry scale 1");
    if (l1_haar(H, witness.base) != 1)
      throw ParameterError("r=1 witness is not normalized in ell^1(H,h)");
  } else {
    if (witness.scale_sq <= 0)
      throw ParameterError("r=2 witness needs a positive squared scale");
    if (witness.scale_sq * l2sq_haar(H, witness.base) != 1)
      throw ParameterError("r=2 witness is not normalized in ell^2(H,h)");
  }
  ReiterReport report;
  report.r = witness.r;
  report.E = E;
  report.squared = witness.r == 2;
  report.deficiency = 0;
  for (const auto& x : E) {
    const FiniteFunction diff =
        translate(H, x, witness.base) - witness.base;
    const Rational value = witness.r == 1
                               ? l1_haar(H, diff)
                               : witness.scale_sq * l2sq_haar(H, diff);
    if (value > report.deficiency) report.deficiency = value;
  }
  return report;
}

// Bounded-approximate-identity certificate
//   u = h(V)^{-1} (1_{K*V} *_h 1~_V),
// which is 1 on K, nonnegative, supported in K*V*V~, with the ell^2
// factorization bound ||u||^2 <= h(K*V)/h(V) tracked as an exact square.
struct BaiCertificate {
  ElementSet K;
  ElementSet V;
  FiniteFunction u;
  Rational bound_sq;

  std::string bound_decimal(int digits = 6) const {
    return sqrt_decimal(bound_sq, digits);
  }
};

inline BaiCertificate bai_certificate(const Hypergroup& H, const ElementSet& K,
                                      const ElementSet& V) {
  if (V.empty()) throw ParameterError("certificate needs a nonempty V");
  for (const auto& k : K) H.require_member(k);
  const ElementSet KV = support_product(H, K, V);
  const FiniteFunction one_kv = FiniteFunction::indicator(KV);
  const FiniteFunction one_v_tilde =
      tilde(H, FiniteFunction::indicator(V));
  const Rational hv = haar_mass(H, V);
  BaiCertificate cert;
  cert.K = K;
  cert.V = V;
  cert.u = convolve_functions(H, one_kv, one_v_tilde).scaled(1 / hv);
  cert.bound_sq = haar_mass(H, KV) / hv;

  if (!cert.u.nonnegative())
    throw CertificateError("certificate is negative somewhere on " +
                           H.descriptor());
  for (const auto& k : K)
    if (cert.u.value_at(k) != 1)
      throw CertificateError("certificate is not 1 at " + element_string(k) +
                             " (value " + rational_string(cert.u.value_at(k)) +
                             ")");
  ElementSet vtilde;
  for (const auto& v : V) vtilde.insert(H.involution(v));
  const ElementSet carrier = support_product(H, KV, vtilde);
  for (const auto& [x, value] : cert.u.entries())
    if (!carrier.count(x))
      throw CertificateError("certificate support escapes K*V*V~ at " +
                             element_string(x));
  return cert;
}

// Counts {x in T : h(x) <= M} along nested truncation stages. "Saturating"
// counts are evidence of a finite level set; counts tracking the stage sizes
// mean every element seen so far has small Haar weight.
enum class LevelSetVerdict { AllWithinBound, Saturating, Growing };

inline const char* level_set_verdict_name(LevelSetVerdict v) {
  switch (v) {
    case LevelSetVerdict::AllWithinBound:
      return "all-within-bound";
    case LevelSetVerdict::Saturating:
      return "saturating";
    case LevelSetVerdict::Growing:
      return "growing";
  }
  return "?";
}

struct LevelSetReport {
  Rational bound;
  struct Stage {
    std::size_t truncation_size;
    std::size_t count;
  };
  std::vector<Stage> stages;
  Rational max_weight;
  LevelSetVerdict verdict = LevelSetVerdict::Growing;
};

inline LevelSetReport haar_level_set(const Hypergroup& H, const Rational& M,
                                     const std::vector<ElementSet>& stages) {
  if (stages.empty()) throw ParameterError("level-set check needs stages");
  for (std::size_t i = 1; i < stages.size(); ++i)
    if (!std::includes(stages[i].begin(), stages[i].end(),
                       stages[i - 1].begin(), stages[i - 1].end()))
      throw ParameterError("level-set stages must be nested");
  LevelSetReport report;
  report.bound = M;
  report.max_weight = 0;
  for (const auto& T : stages) {
    std::size_t count = 0;
    for (const auto& x : T) {
      const Rational h = H.haar_weight(x);
      if (h > report.max_weight) report.max_weight = h;
      if (h <= M) ++count;
    }
    report.stages.push_back({T.size(), count});
  }
  const auto& last = report.stages.back();
  if (last.count == last.truncation_size) {
    report.verdict = LevelSetVerdict::AllWithinBound;
  } else if (report.stages.size() >= 2 &&
             report.stages[report.stages.size() - 2].count == last.count) {
    report.verdict = LevelSetVerdict::Saturating;
  } else {
    report.verdict = LevelSetVerdict::Growing;
  }
  return report;
}

// Convenience staging: nested prefixes of a single truncation set.
inline std::vector<ElementSet> prefix_stages(const ElementSet& T,
                                             std::size_t stages = 4) {
  if (T.empty()) throw ParameterError("level-set truncation must be nonempty");
  stages = std::max<std::size_t>(1, std::min(stages, T.size()));
  std::vector<ElementSet> out;
  std::vector<Element> linear(T.begin(), T.end());
  for (std::size_t s = 1; s <= stages; ++s) {
    const std::size_t take = s == stages
                                 ? linear.size()
                                 : std::max<std::size_t>(1, linear.size() * s / stages);
    out.emplace_back(linear.begin(),
                     linear.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

}  // namespace hg
