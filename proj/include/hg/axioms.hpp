#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hg/finite_function.hpp"
#include "hg/hypergroup.hpp"
#include "hg/ops.hpp"

namespace hg {

struct AxiomOptions {
  int threads = 1;
  // Budget for the measure-level associativity sample that runs through the
  // public convolution path (and therefore through the cache).
  std::size_t rational_triples = 512;
  // Cap on translation points per sampled function in the invariance check.
  std::size_t haar_translations = 128;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string detail;
};

struct AxiomReport {
  std::string descriptor;
  std::size_t truncation_size = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.passed; });
  }

  const AxiomCheck* find(std::string_view axiom) const {
    for (const auto& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }
};

namespace detail {

// Dense integer view of the structure constants over a truncation T:
// elements get dense ids (T first, then the closure T*T, then (T*T)*T as
// discovered), and every unordered pair drawn from (T*T) x T gets a CSR block
// of integer terms. Associativity reduces to comparing, for each unordered
// triple {x,y,z} in T, the integer vectors
//
//   S(v) = sum_w m(x,y;w) m(w,z;v)
//
// across the three ways of splitting the triple: the rational prefactor
// scale(v)/(den^2 scale(x) scale(y) scale(z)) is the same for all three, and
// the point weights scale(w) of the inner points cancel. Commutativity of the
// operation makes ordered triples redundant.
class IntegerKernel {
 public:
  IntegerKernel(const Hypergroup& H, const std::vector<Element>& trunc)
      : H_(H), n_trunc_(trunc.size()) {
    elems_.reserve(trunc.size() * 4);
    for (const auto& e : trunc) intern(e);
    if (elems_.size() != n_trunc_)
      throw ParameterError("truncation contains duplicate elements");
  }

  // Phase A+B: structure terms for all unordered pairs in (T*T) x T.
  // Returns false and fills `witness` on the first integer mass failure
  // (terms must be positive and satisfy sum m*scale(c) = den*scale(a)*scale(b)).
  bool build(std::string& witness) {
    bool mass_ok = true;
    block_of_.assign(n_trunc_ * n_trunc_, kNoBlock);
    for (std::size_t x = 0; x < n_trunc_; ++x)
      for (std::size_t y = x; y < n_trunc_; ++y)
        add_block(x, y, mass_ok, witness);
    n_c2_ = elems_.size();
    // Re-key block lookups to the full (closure x T) index space.
    std::vector<std::uint32_t> wide(n_c2_ * n_trunc_, kNoBlock);
    for (std::size_t x = 0; x < n_trunc_; ++x)
      for (std::size_t y = 0; y < n_trunc_; ++y)
        wide[x * n_trunc_ + y] = block_of_[x * n_trunc_ + y];
    block_of_ = std::move(wide);
    for (std::size_t w = n_trunc_; w < n_c2_; ++w)
      for (std::size_t z = 0; z < n_trunc_; ++z)
        add_block(w, z, mass_ok, witness);
    n_all_ = elems_.size();
    return mass_ok;
  }

  std::size_t truncation_size() const { return n_trunc_; }
  std::size_t closure_size() const { return n_c2_; }
  std::size_t id_space() const { return n_all_; }
  const Element& element(std::size_t id) const { return elems_[id]; }

  struct TripleWitness {
    std::size_t x, y, z;
    std::string text;
  };

  // Phase C: the full unordered-triple scan.
  std::optional<TripleWitness> scan_triples(int threads) const {
    const int n_threads =
        std::max(1, std::min<int>(threads, static_cast<int>(n_trunc_)));
    std::vector<std::optional<TripleWitness>> found(
        static_cast<std::size_t>(n_threads));
    auto run = [this, n_threads, &found](int tid) {
      Scratch s1(n_all_), s2(n_all_);
      std::optional<TripleWitness>& local = found[static_cast<std::size_t>(tid)];
      for (std::size_t x = static_cast<std::size_t>(tid); x < n_trunc_;
           x += static_cast<std::size_t>(n_threads)) {
        for (std::size_t y = x; y < n_trunc_; ++y) {
          for (std::size_t z = y; z < n_trunc_; ++z) {
            accumulate(x, y, z, s1);
            accumulate(y, z, x, s2);
            if (!equal(s1, s2)) {
              local = make_witness(x, y, z, y, z, x, s1, s2);
              s1.reset();
              s2.reset();
              return;
            }
            s2.reset();
            accumulate(x, z, y, s2);
            if (!equal(s1, s2)) {
              local = make_witness(x, y, z, x, z, y, s1, s2);
              s1.reset();
              s2.reset();
              return;
            }
            s1.reset();
            s2.reset();
          }
        }
      }
    };
    if (n_threads == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(n_threads));
      for (int t = 0; t < n_threads; ++t) pool.emplace_back(run, t);
      for (auto& t : pool) t.join();
    }
    std::optional<TripleWitness> best;
    for (auto& f : found)
      if (f && (!best || std::tie(f->x, f->y, f->z) <
                             std::tie(best->x, best->y, best->z)))
        best = f;
    return best;
  }

  std::size_t triple_count() const {
    const std::size_t n = n_trunc_;
    return n * (n + 1) * (n + 2) / 6;
  }

 private:
  static constexpr std::uint32_t kNoBlock = 0xffffffffu;

  struct Scratch {
    explicit Scratch(std::size_t n) : value(n, 0) {}
    std::vector<__int128> value;
    std::vector<std::uint32_t> touched;
    void reset() {
      for (auto v : touched) value[v] = 0;
      touched.clear();
    }
  };

  std::uint32_t intern(const Element& e) {
    auto [it, inserted] =
        ids_.emplace(e, static_cast<std::uint32_t>(elems_.size()));
    if (inserted) {
      elems_.push_back(e);
      scale_.push_back(H_.point_scale(e));
    }
    return it->second;
  }

  void add_block(std::size_t a, std::size_t b, bool& mass_ok,
                 std::string& witness) {
    const std::size_t key = a * n_trunc_ + b;
    if (block_of_[key] != kNoBlock) return;
    auto terms = H_.structure_terms(elems_[a], elems_[b]);
    const std::uint32_t block = static_cast<std::uint32_t>(block_begin_.size());
    block_begin_.push_back(static_cast<std::uint32_t>(terms_.size()));
    __int128 mass = 0;
    bool positive = true;
    for (const auto& t : terms) {
      const std::uint32_t id = intern(t.point);
      terms_.emplace_back(id, t.mult);
      mass += static_cast<__int128>(t.mult) * scale_[id];
      positive = positive && t.mult > 0;
    }
    const __int128 expected = static_cast<__int128>(H_.scale_denominator()) *
                              scale_[a] * scale_[b];
    if (mass_ok && (!positive || mass != expected)) {
      mass_ok = false;
      std::ostringstream os;
      os << "integer mass identity fails for (" << elems_[a] << ", "
         << elems_[b] << ")";
      if (!positive) os << ": nonpositive multiplicity";
      witness = os.str();
    }
    block_of_[key] = block;
    if (a < n_trunc_ && b < n_trunc_)
      block_of_[b * n_trunc_ + a] = block;
  }

  // a indexes the closure space, b must lie in the truncation.
  std::pair<std::uint32_t, std::uint32_t> block_range(std::size_t a,
                                                      std::size_t b) const {
    const std::uint32_t blk = block_of_[a * n_trunc_ + b];
    const std::uint32_t begin = block_begin_[blk];
    const std::uint32_t end = blk + 1 < block_begin_.size()
                                  ? block_begin_[blk + 1]
                                  : static_cast<std::uint32_t>(terms_.size());
    return {begin, end};
  }

  // s += coefficient vector of ((a*b)*c) in the integer normalization;
  // a, b, c < n_trunc, and block_of_ is symmetric within the truncation.
  void accumulate(std::size_t a, std::size_t b, std::size_t c,
                  Scratch& s) const {
    auto [ab_begin, ab_end] = block_range(a, b);
    for (std::uint32_t i = ab_begin; i < ab_end; ++i) {
      const auto [w, m1] = terms_[i];
      auto [wz_begin, wz_end] = block_range(w, c);
      for (std::uint32_t j = wz_begin; j < wz_end; ++j) {
        const auto [v, m2] = terms_[j];
        if (s.value[v] == 0) s.touched.push_back(v);
        s.value[v] += static_cast<__int128>(m1) * m2;
      }
    }
  }

  static bool equal(const Scratch& s1, const Scratch& s2) {
    for (auto v : s1.touched)
      if (s1.value[v] != s2.value[v]) return false;
    for (auto v : s2.touched)
      if (s1.value[v] != s2.value[v]) return false;
    return true;
  }

  std::optional<TripleWitness> make_witness(std::size_t x, std::size_t y,
                                            std::size_t z, std::size_t la,
                                            std::size_t lb, std::size_t lc,
                                            const Scratch& s1,
                                            const Scratch& s2) const {
    std::uint32_t bad = 0;
    bool found = false;
    for (auto v : s1.touched)
      if (s1.value[v] != s2.value[v]) {
        bad = v;
        found = true;
        break;
      }
    for (auto v : s2.touched) {
      if (found) break;
      if (s1.value[v] != s2.value[v]) {
        bad = v;
        break;
      }
    }
    std::ostringstream os;
    os << "(" << elems_[x] << " * " << elems_[y] << ") * " << elems_[z]
       << " != " << elems_[la] << " * (" << elems_[lb] << " * " << elems_[lc]
       << ") at point " << elems_[bad];
    return TripleWitness{x, y, z, os.str()};
  }

  const Hypergroup& H_;
  std::size_t n_trunc_;
  std::size_t n_c2_ = 0;
  std::size_t n_all_ = 0;
  std::vector<Element> elems_;
  std::unordered_map<Element, std::uint32_t, ElementHash> ids_;
  std::vector<std::int64_t> scale_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::uint32_t> block_begin_;
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms_;
};

inline std::string pair_text(const Element& x, const Element& y) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ")";
  return os.str();
}

}  // namespace detail

// Checks the hypergroup axioms exactly on a finite truncation T:
// H1 (positivity and total mass), H4 (identity), H5 (involutive
// anti-automorphism), H6 (identity in the support iff the pair is adjoint),
// commutativity of the provider, full associativity over unordered triples on
// the integer layer plus a sampled measure-level cross-check, agreement of
// cached measures with freshly derived ones, and Haar invariance
// h(L_x f) = h(f) for sampled functions. Failures are report content;
// the only error is a malformed request.
inline AxiomReport verify_axioms(const Hypergroup& H, const ElementSet& T,
                                 AxiomOptions options = {}) {
  if (T.empty()) throw ParameterError("truncation must be nonempty");
  for (const auto& t : T) H.require_member(t);
  if (!T.count(H.identity()))
    throw ParameterError("truncation must contain the identity");

  AxiomReport report;
  report.descriptor = H.descriptor();
  report.truncation_size = T.size();
  std::vector<Element> trunc(T.begin(), T.end());
  const std::size_t n = trunc.size();

  // H1: positive coefficients, total mass exactly 1, through the public path.
  {
    AxiomCheck check{"H1 probability", true, ""};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < n && check.passed; ++i)
      for (std::size_t j = i; j < n && check.passed; ++j) {
        const Measure& m = H.convolve(trunc[i], trunc[j]);
        ++pairs;
        if (m.empty() || !m.nonnegative() || m.mass() != 1) {
          check.passed = false;
          check.detail = "mass or positivity fails at " +
                         detail::pair_text(trunc[i], trunc[j]);
        }
      }
    if (check.passed)
      check.detail = std::to_string(pairs) + " pairs are probability measures";
    report.checks.push_back(std::move(check));
  }

  // H4: the identity is a two-sided convolution unit, checked raw in both
  // argument orders and through the cached path.
  {
    AxiomCheck check{"H4 identity", true, ""};
    const Element& e = H.identity();
    for (const auto& x : trunc) {
      const Measure expect = Measure::dirac(x);
      if (H.measure_from_terms(e, x) != expect ||
          H.measure_from_terms(x, e) != expect || H.convolve(e, x) != expect) {
        check.passed = false;
        check.detail = "delta_e * delta_x != delta_x at x = " +
                       element_string(x);
        break;
      }
    }
    if (check.passed)
      check.detail = "identity acts as unit on " + std::to_string(n) +
                     " elements";
    report.checks.push_back(std::move(check));
  }

  // H5: involution is involutive and anti-multiplicative. Membership of x~ in
  // the hypergroup is part of the check.
  {
    AxiomCheck check{"H5 involution", true, ""};
    for (const auto& x : trunc) {
      bool ok = true;
      try {
        ok = H.involution(H.involution(x)) == x;
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        check.passed = false;
        check.detail = "x~~ != x at x = " + element_string(x);
        break;
      }
    }
    if (check.passed && H.involution(H.identity()) != H.identity()) {
      check.passed = false;
      check.detail = "e~ != e";
    }
    for (std::size_t i = 0; i < n && check.passed; ++i)
      for (std::size_t j = i; j < n && check.passed; ++j) {
        const Measure lhs = H.involution(H.convolve(trunc[i], trunc[j]));
        const Measure rhs =
            H.convolve(H.involution(trunc[j]), H.involution(trunc[i]));
        if (lhs != rhs) {
          check.passed = false;
          check.detail = "(delta_x * delta_y)~ != delta_y~ * delta_x~ at " +
                         detail::pair_text(trunc[i], trunc[j]);
        }
      }
    if (check.passed)
      check.detail = "involutive anti-automorphism on " +
                     std::to_string(n * (n + 1) / 2) + " pairs";
    report.checks.push_back(std::move(check));
  }

  // H6: e lies in supp(delta_x * delta_y) exactly when y = x~.
  {
    AxiomCheck check{"H6 identity support", true, ""};
    const Element& e = H.identity();
    for (std::size_t i = 0; i < n && check.passed; ++i)
      for (std::size_t j = i; j < n && check.passed; ++j) {
        const bool has_e = H.convolve(trunc[i], trunc[j]).find(e) != nullptr;
        const bool adjoint = trunc[j] == H.involution(trunc[i]);
        if (has_e != adjoint) {
          check.passed = false;
          check.detail = std::string(has_e ? "identity present" : "identity missing") +
                         " at non-adjoint pair " +
                         detail::pair_text(trunc[i], trunc[j]);
        }
      }
    if (check.passed)
      check.detail = "biconditional holds on " +
                     std::to_string(n * (n + 1) / 2) + " pairs";
    report.checks.push_back(std::move(check));
  }

  // Commutativity of the raw provider (the cached operation is commutative by
  // construction, so this is checked on structure terms in both orders).
  {
    AxiomCheck check{"commutativity", true, ""};
    auto sorted_terms = [&H](const Element& a, const Element& b) {
      auto t = H.structure_terms(a, b);
      std::sort(t.begin(), t.end(), [](const auto& p, const auto& q) {
        return p.point < q.point;
      });
      return t;
    };
    for (std::size_t i = 0; i < n && check.passed; ++i)
      for (std::size_t j = i + 1; j < n && check.passed; ++j) {
        auto ab = sorted_terms(trunc[i], trunc[j]);
        auto ba = sorted_terms(trunc[j], trunc[i]);
        bool same = ab.size() == ba.size();
        for (std::size_t k = 0; same && k < ab.size(); ++k)
          same = ab[k].point == ba[k].point && ab[k].mult == ba[k].mult;
        if (!same) {
          check.passed = false;
          check.detail = "structure terms differ across argument order at " +
                         detail::pair_text(trunc[i], trunc[j]);
        }
      }
    if (check.passed)
      check.detail = "provider is symmetric on " +
                     std::to_string(n * (n - 1) / 2) + " pairs";
    report.checks.push_back(std::move(check));
  }

  // Associativity on the integer layer, all unordered triples.
  {
    AxiomCheck check{"associativity", true, ""};
    detail::IntegerKernel kernel(H, trunc);
    std::string mass_witness;
    const bool mass_ok = kernel.build(mass_witness);
    if (!mass_ok) {
      // Fold the kernel-layer mass failure into H1 as well: the integer and
      // rational layers must agree.
      report.checks[0].passed = false;
      if (report.checks[0].detail.find("fails") == std::string::npos)
        report.checks[0].detail = mass_witness;
    }
    auto witness = kernel.scan_triples(options.threads);
    if (witness) {
      check.passed = false;
      check.detail = witness->text;
    } else {
      std::ostringstream os;
      os << kernel.triple_count() << " unordered triples associate exactly ("
         << kernel.closure_size() << " closure points)";
      check.detail = os.str();
    }
    report.checks.push_back(std::move(check));
  }

  // Measure-level associativity sample through the cached rational path.
  {
    AxiomCheck check{"associativity (measure sample)", true, ""};
    const std::size_t total = n * (n + 1) * (n + 2) / 6;
    const std::size_t budget = std::max<std::size_t>(1, options.rational_triples);
    const std::size_t step = std::max<std::size_t>(1, total / budget);
    std::size_t index = 0, tested = 0;
    for (std::size_t i = 0; i < n && check.passed; ++i)
      for (std::size_t j = i; j < n && check.passed; ++j)
        for (std::size_t k = j; k < n && check.passed; ++k) {
          if (index++ % step != 0) continue;
          ++tested;
          const Measure left = H.convolve(H.convolve(trunc[i], trunc[j]),
                                          Measure::dirac(trunc[k]));
          const Measure right = H.convolve(Measure::dirac(trunc[i]),
                                           H.convolve(trunc[j], trunc[k]));
          if (left != right) {
            check.passed = false;
            std::ostringstream os;
            os << "measure associativity fails at (" << trunc[i] << ", "
               << trunc[j] << ", " << trunc[k] << ")";
            check.detail = os.str();
          }
        }
    if (check.passed)
      check.detail = std::to_string(tested) + " sampled triples agree";
    report.checks.push_back(std::move(check));
  }

  // Cached measures must match a fresh derivation from the provider. This is
  // the check that catches corrupted or stale cache entries directly.
  {
    AxiomCheck check{"cache consistency", true, ""};
    for (std::size_t i = 0; i < n && check.passed; ++i)
      for (std::size_t j = i; j < n && check.passed; ++j)
        if (H.convolve(trunc[i], trunc[j]) !=
            H.measure_from_terms(trunc[i], trunc[j])) {
          check.passed = false;
          check.detail = "cached measure differs from fresh derivation at " +
                         detail::pair_text(trunc[i], trunc[j]);
        }
    if (check.passed)
      check.detail = "cache agrees with provider on " +
                     std::to_string(n * (n + 1) / 2) + " pairs";
    report.checks.push_back(std::move(check));
  }

  // Haar invariance: h(L_x f) = h(f) for sampled finitely supported f and
  // sampled x in T (all x when small).
  {
    AxiomCheck check{"haar invariance", true, ""};
    std::vector<FiniteFunction> samples;
    {
      samples.push_back(FiniteFunction::indicator(ElementSet{trunc.back()}));
      std::map<Element, Rational> stripes, valued;
      std::mt19937_64 rng(0x5eed);
      std::map<Element, Rational> coin;
      for (std::size_t i = 0; i < n; ++i) {
        if (i % 3 == 0) stripes[trunc[i]] = 1;
        if (i % 4 == 1)
          valued[trunc[i]] = make_rational(Integer(i % 5 + 1), Integer(3));
        if (rng() & 1) coin[trunc[i]] = 1;
      }
      if (!stripes.empty()) samples.push_back(FiniteFunction::from_map(stripes));
      if (!valued.empty()) samples.push_back(FiniteFunction::from_map(valued));
      if (!coin.empty()) samples.push_back(FiniteFunction::from_map(coin));
    }
    const std::size_t x_step =
        std::max<std::size_t>(1, n / std::max<std::size_t>(1, options.haar_translations));
    std::size_t tested = 0;
    for (const auto& f : samples) {
      Rational base;
      try {
        base = haar_integral(H, f);
      } catch (const Error& e) {
        check.passed = false;
        check.detail = std::string("haar weight undefined: ") + e.what();
        break;
      }
      for (std::size_t i = 0; i < n && check.passed; i += x_step) {
        ++tested;
        try {
          if (haar_integral(H, translate(H, trunc[i], f)) != base) {
            check.passed = false;
            check.detail =
                "h(L_x f) != h(f) at x = " + element_string(trunc[i]);
          }
        } catch (const Error& e) {
          check.passed = false;
          check.detail = std::string("translation failed at x = ") +
                         element_string(trunc[i]) + ": " + e.what();
        }
      }
      if (!check.passed) break;
    }
    if (check.passed)
      check.detail = std::to_string(tested) + " translation checks over " +
                     std::to_string(samples.size()) + " functions";
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace hg
