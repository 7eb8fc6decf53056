#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hg/amenability.hpp"
#include "hg/catalog/chebyshev.hpp"
#include "hg/catalog/su2_dual.hpp"
#include "hg/growth.hpp"

using hg::Element;
using hg::ElementSet;
using hg::Rational;

namespace {

ElementSet su2_segment(const hg::Su2Dual& H, std::int64_t lo, std::int64_t hi) {
  ElementSet out;
  for (std::int64_t n = lo; n <= hi; ++n) out.insert(H.level(n));
  return out;
}

}  // namespace

TEST_CASE("leptin ratios against hand values") {
  auto su2 = hg::build_su2_dual();
  const ElementSet K{su2->level(1)};
  CHECK(hg::leptin_ratio(*su2, K, su2_segment(*su2, 0, 2)).value ==
        Rational(15, 7));

  auto cheb = hg::build_chebyshev(1);
  const ElementSet Kc{cheb->point({1})};
  ElementSet Vc{cheb->point({0}), cheb->point({1}), cheb->point({2})};
  CHECK(hg::leptin_ratio(*cheb, Kc, Vc).value == Rational(7, 5));

  CHECK_THROWS_AS(hg::leptin_ratio(*su2, K, ElementSet{}),
                  hg::ParameterError);
}

TEST_CASE("folner ratios: pointwise formula and strong variant") {
  auto su2 = hg::build_su2_dual();
  const Element one = su2->level(1);
  for (std::int64_t n = 1; n <= 60; ++n) {
    const ElementSet V = su2_segment(*su2, 0, n);
    CHECK(hg::folner_ratio(*su2, one, V).value ==
          Rational(6 * (n + 2), (n + 1) * (2 * n + 3)));
  }

  // for K = {x} the strong ratio is the pointwise one, and the
  // leptin-minus-one comparison is exact equality here
  const ElementSet V9 = su2_segment(*su2, 0, 9);
  CHECK(hg::strong_folner_ratio(*su2, ElementSet{one}, V9).value ==
        Rational(11, 35));
  const hg::SfImpliesLReport chain =
      hg::check_sf_implies_l(*su2, ElementSet{one}, V9);
  CHECK(chain.leptin_minus_one == Rational(11, 35));
  CHECK(chain.strong_folner == Rational(11, 35));
  CHECK(chain.holds);

  auto cheb = hg::build_chebyshev(1);
  ElementSet Vc;
  for (std::int64_t n = 0; n <= 9; ++n) Vc.insert(cheb->point({n}));
  CHECK(hg::folner_ratio(*cheb, cheb->point({1}), Vc).value ==
        Rational(2, 19));
}

TEST_CASE("strong folner dominates pointwise subadditively") {
  auto su2 = hg::build_su2_dual();
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    ElementSet K, V;
    while (K.size() < 1 + rng() % 3)
      K.insert(su2->level(static_cast<std::int64_t>(rng() % 6)));
    while (V.size() < 2 + rng() % 6)
      V.insert(su2->level(static_cast<std::int64_t>(rng() % 12)));
    const Rational sf = hg::strong_folner_ratio(*su2, K, V).value;
    Rational sum(0);
    for (const auto& x : K) sum += hg::folner_ratio(*su2, x, V).value;
    CHECK(sf <= sum);
    CHECK(hg::check_sf_implies_l(*su2, K, V).holds);
  }
}

TEST_CASE("leptin search over the ball family") {
  auto su2 = hg::build_su2_dual();
  hg::BallScanner scanner(*su2, su2->default_generators());
  const auto family = [&scanner](std::size_t n) { return scanner.ball(n); };

  const hg::LeptinSearchResult best = hg::leptin_search(
      *su2, ElementSet{su2->level(1)}, family, 120, Rational(11, 10));
  CHECK(best.tried == 120);
  CHECK(best.best_index == 120);  // ratios decrease along the family
  CHECK(best.best_ratio == Rational(10045, 9801));
  CHECK(best.certified);

  // K = {e}: the very first candidate already achieves ratio 1
  const hg::LeptinSearchResult triv = hg::leptin_search(
      *su2, ElementSet{su2->identity()}, family, 5, Rational(1),
      Rational(1, 100));
  CHECK(triv.best_ratio == 1);
  CHECK(triv.best_index == 1);
  CHECK(triv.certified);

  auto cheb = hg::build_chebyshev(1);
  hg::BallScanner cheb_scan(*cheb, cheb->default_generators());
  const hg::LeptinSearchResult cb = hg::leptin_search(
      *cheb, ElementSet{cheb->point({1})},
      [&cheb_scan](std::size_t n) { return cheb_scan.ball(n); }, 100,
      Rational(51, 50));
  CHECK(cb.best_ratio == Rational(203, 201));
  CHECK(cb.certified);

  CHECK_THROWS_AS(
      hg::leptin_search(*su2, ElementSet{su2->level(1)}, family, 0),
      hg::ParameterError);
}

TEST_CASE("summing sequence diagnostics") {
  auto su2 = hg::build_su2_dual();
  const auto nested = [&su2](std::size_t n) {
    ElementSet out;
    for (std::size_t k = 0; k <= 5 * n; ++k)
      out.insert(su2->level(static_cast<std::int64_t>(k)));
    return out;
  };
  const hg::SummingReport ok = hg::summing_sequence_check(
      *su2, nested, ElementSet{su2->level(1), su2->level(2)}, 8);
  CHECK(ok.nested);
  REQUIRE(ok.tracks.size() == 2);
  for (const auto& track : ok.tracks) {
    REQUIRE(track.ratios.size() == 8);
    CHECK(track.ratios.back() < track.ratios.front());
  }

  const auto sliding = [&su2](std::size_t n) {
    ElementSet out;
    for (std::size_t k = n; k <= n + 3; ++k)
      out.insert(su2->level(static_cast<std::int64_t>(k)));
    return out;
  };
  const hg::SummingReport bad = hg::summing_sequence_check(
      *su2, sliding, ElementSet{su2->level(1)}, 4);
  CHECK_FALSE(bad.nested);
  CHECK_FALSE(bad.nesting_witness.empty());
}

TEST_CASE("reiter witnesses and deficiencies") {
  auto su2 = hg::build_su2_dual();
  const ElementSet V = su2_segment(*su2, 0, 9);
  const ElementSet E{su2->level(1)};

  const hg::ReiterWitness w1 = hg::folner_to_reiter(*su2, V, 1);
  CHECK(hg::l1_haar(*su2, w1.base) == 1);
  const hg::ReiterReport r1 = hg::reiter_deficiency(*su2, w1, E);
  CHECK_FALSE(r1.squared);
  CHECK(r1.deficiency == Rational(2, 7));

  // r = 1 deficiency is bounded by twice the folner ratio
  CHECK(r1.deficiency <= 2 * hg::folner_ratio(*su2, su2->level(1), V).value);

  const hg::ReiterWitness w2 = hg::folner_to_reiter(*su2, V, 2);
  CHECK(w2.scale_sq * hg::l2sq_haar(*su2, w2.base) == 1);
  const hg::ReiterReport r2 = hg::reiter_deficiency(*su2, w2, E);
  CHECK(r2.squared);
  CHECK(r2.deficiency == Rational(221, 1540));

  // deficiency vanishes when translation fixes the witness
  const hg::ReiterReport fixed = hg::reiter_deficiency(
      *su2, w2, ElementSet{su2->identity()});
  CHECK(fixed.deficiency == 0);

  auto cheb = hg::build_chebyshev(1);
  for (std::int64_t n : {1, 2, 5, 20, 63}) {
    ElementSet ball;
    for (std::int64_t k = 0; k <= n; ++k) ball.insert(cheb->point({k}));
    const hg::ReiterReport r = hg::reiter_deficiency(
        *cheb, hg::folner_to_reiter(*cheb, ball, 2),
        ElementSet{cheb->point({1})});
    CHECK(r.deficiency == Rational(1, 2 * n + 1));
  }

  CHECK_THROWS_AS(hg::folner_to_reiter(*su2, V, 3), hg::ParameterError);
  hg::ReiterWitness broken = w2;
  broken.scale_sq = Rational(1, 2);
  CHECK_THROWS_AS(hg::reiter_deficiency(*su2, broken, E),
                  hg::ParameterError);
  hg::ReiterWitness negative = w1;
  negative.base = negative.base.scaled(-1);
  CHECK_THROWS_AS(hg::reiter_deficiency(*su2, negative, E),
                  hg::ParameterError);
}

TEST_CASE("bai certificate for the su2 dual") {
  auto su2 = hg::build_su2_dual();
  const ElementSet K{su2->level(1)};
  const ElementSet V = su2_segment(*su2, 0, 9);
  const hg::BaiCertificate cert = hg::bai_certificate(*su2, K, V);
  CHECK(cert.u.value_at(su2->level(0)) == 1);
  CHECK(cert.u.value_at(su2->level(1)) == 1);
  CHECK(cert.u.value_at(su2->level(2)) == Rational(69, 77));
  CHECK(cert.u.value_at(su2->level(3)) == Rational(93, 110));
  CHECK(cert.bound_sq == Rational(46, 35));
  CHECK(cert.u.nonnegative());
  // support inside K*V*V~ = {0..19}
  for (const auto& [x, value] : cert.u.entries())
    CHECK(x.coord(0) <= 19);
}

TEST_CASE("haar level sets along nested stages") {
  auto cheb = hg::build_chebyshev(1);
  ElementSet T;
  for (std::int64_t n = 0; n <= 100; ++n) T.insert(cheb->point({n}));
  const hg::LevelSetReport all =
      hg::haar_level_set(*cheb, Rational(2), hg::prefix_stages(T, 4));
  CHECK(all.verdict == hg::LevelSetVerdict::AllWithinBound);
  CHECK(all.stages.back().count == 101);
  CHECK(all.max_weight == 2);

  auto su2 = hg::build_su2_dual();
  ElementSet S = su2_segment(*su2, 0, 200);
  const hg::LevelSetReport sat =
      hg::haar_level_set(*su2, Rational(100), hg::prefix_stages(S, 4));
  CHECK(sat.verdict == hg::LevelSetVerdict::Saturating);
  CHECK(sat.stages.back().count == 10);
  CHECK(sat.max_weight == Rational(201 * 201));

  const hg::LevelSetReport none =
      hg::haar_level_set(*su2, Rational(1, 2), hg::prefix_stages(S, 4));
  CHECK(none.stages.back().count == 0);

  // h(n) = (n+1)^2 <= 175^2 cuts off at n = 174, inside the last stage:
  // counts 50, 100, 150, 175 keep growing without filling the truncation
  const hg::LevelSetReport grow = hg::haar_level_set(
      *su2, Rational(30625), hg::prefix_stages(S, 4));
  CHECK(grow.verdict == hg::LevelSetVerdict::Growing);

  std::vector<ElementSet> not_nested{su2_segment(*su2, 0, 5),
                                     su2_segment(*su2, 3, 8)};
  CHECK_THROWS_AS(hg::haar_level_set(*su2, Rational(2), not_nested),
                  hg::ParameterError);
}
