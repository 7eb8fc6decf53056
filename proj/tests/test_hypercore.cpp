#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "hg/axioms.hpp"
#include "hg/catalog/cache_io.hpp"
#include "hg/catalog/chebyshev.hpp"
#include "hg/catalog/su2_dual.hpp"
#include "hg/ops.hpp"

using hg::Element;
using hg::ElementSet;
using hg::Rational;

TEST_CASE("rational construction and rendering") {
  CHECK(hg::make_rational(6, 4) == Rational(3, 2));
  CHECK(hg::make_rational(6, -4) == Rational(-3, 2));
  CHECK(hg::make_rational(-6, -4) == Rational(3, 2));
  CHECK_THROWS_AS(hg::make_rational(1, 0), hg::ValidationError);
  CHECK(hg::rational_string(Rational(45, 8)) == "45/8");
  CHECK(hg::to_decimal(Rational(1, 4), 6) == "0.25");
  CHECK(hg::sqrt_decimal(Rational(1, 4), 6) == "0.5");
  CHECK(hg::to_decimal(Rational(2, 3), 6) == "0.666667");
}

TEST_CASE("element ordering and printing") {
  const Element a = Element::scalar(7, 3);
  const Element b(7, {1, 0});
  const Element c(7, {1, 2});
  CHECK(hg::element_string(a) == "3");
  CHECK(hg::element_string(b) == "(1,0)");
  CHECK(b < c);
  CHECK(a != b);
  CHECK(hg::set_string(ElementSet{b, c}) == "{(1,0), (1,2)}");
}

TEST_CASE("measures drop zeros and report exact masses") {
  const Element x = Element::scalar(1, 0);
  const Element y = Element::scalar(1, 2);
  std::map<Element, Rational> values{{x, Rational(1, 4)},
                                     {y, Rational(3, 4)}};
  const hg::Measure m = hg::Measure::from_map(values);
  CHECK(m.support_size() == 2);
  CHECK(m.mass() == 1);
  CHECK(m.is_probability());
  CHECK(m.value_at(x) == Rational(1, 4));
  CHECK(m.value_at(Element::scalar(1, 1)) == 0);
  values[y] = 0;
  CHECK(hg::Measure::from_map(values).support_size() == 1);
}

TEST_CASE("clebsch-gordan convolution and haar weights") {
  auto H = hg::build_su2_dual();
  const Element one = H->level(1);
  const Element two = H->level(2);

  const hg::Measure& m11 = H->convolve(one, one);
  CHECK(m11.value_at(H->level(0)) == Rational(1, 4));
  CHECK(m11.value_at(two) == Rational(3, 4));
  CHECK(m11.support_size() == 2);

  const hg::Measure& m12 = H->convolve(one, two);
  CHECK(m12.value_at(one) == Rational(1, 3));
  CHECK(m12.value_at(H->level(3)) == Rational(2, 3));

  // memoized: the same pair yields the same object, in either order
  CHECK(&H->convolve(one, two) == &H->convolve(two, one));

  for (std::int64_t n = 0; n <= 20; ++n)
    CHECK(H->haar_weight(H->level(n)) == Rational((n + 1) * (n + 1)));

  // bilinear extension against dirac combinations
  hg::Measure mix = H->convolve(
      hg::Measure::from_map({{one, Rational(1, 2)}, {two, Rational(1, 2)}}),
      hg::Measure::dirac(one));
  CHECK(mix.mass() == 1);
  CHECK(mix.value_at(H->level(0)) == Rational(1, 8));

  CHECK(H->involution(m12) == m12);  // su2 levels are self-involutive
}

TEST_CASE("translation preserves the haar integral") {
  auto H = hg::build_su2_dual();
  const hg::FiniteFunction f = hg::FiniteFunction::indicator(
      ElementSet{H->level(0), H->level(1), H->level(2)});
  const hg::FiniteFunction g = hg::translate(*H, H->level(1), f);
  CHECK(g.value_at(H->level(0)) == 1);
  CHECK(g.value_at(H->level(1)) == 1);
  CHECK(g.value_at(H->level(2)) == Rational(1, 3));
  CHECK(g.value_at(H->level(3)) == Rational(3, 8));
  CHECK(hg::haar_integral(*H, g) == hg::haar_integral(*H, f));
  CHECK(hg::haar_integral(*H, f) == 14);
}

TEST_CASE("indicator transfer identity (1_V * 1~_V)(e) = h(V)") {
  auto su2 = hg::build_su2_dual();
  ElementSet V;
  for (std::int64_t n = 0; n <= 9; ++n) V.insert(su2->level(n));
  const hg::FiniteFunction u = hg::convolve_functions(
      *su2, hg::FiniteFunction::indicator(V),
      hg::tilde(*su2, hg::FiniteFunction::indicator(V)));
  CHECK(u.value_at(su2->identity()) == hg::haar_mass(*su2, V));
  CHECK(u.value_at(su2->identity()) == 385);

  auto cheb = hg::build_chebyshev(2);
  std::mt19937_64 rng(0x5eed);
  for (int round = 0; round < 8; ++round) {
    ElementSet W;
    while (W.size() < 4)
      W.insert(cheb->point({static_cast<std::int64_t>(rng() % 5),
                            static_cast<std::int64_t>(rng() % 5)}));
    const hg::FiniteFunction w = hg::convolve_functions(
        *cheb, hg::FiniteFunction::indicator(W),
        hg::tilde(*cheb, hg::FiniteFunction::indicator(W)));
    CHECK(w.value_at(cheb->identity()) == hg::haar_mass(*cheb, W));
  }
}

TEST_CASE("function convolution against hand values") {
  auto H = hg::build_chebyshev(1);
  const hg::FiniteFunction f =
      hg::FiniteFunction::indicator(ElementSet{H->point({1})});
  const hg::FiniteFunction ff = hg::convolve_functions(*H, f, f);
  CHECK(ff.value_at(H->point({0})) == 2);
  CHECK(ff.value_at(H->point({2})) == 1);
  CHECK(ff.support_size() == 2);
}

TEST_CASE("axiom verification passes on a clean truncation") {
  auto H = hg::build_su2_dual();
  ElementSet T;
  for (std::int64_t n = 0; n <= 10; ++n) T.insert(H->level(n));
  const hg::AxiomReport report = hg::verify_axioms(*H, T, {});
  CHECK(report.all_passed());
  CHECK(report.truncation_size == 11);

  CHECK_THROWS_AS(hg::verify_axioms(*H, ElementSet{}, {}),
                  hg::ParameterError);
  ElementSet no_identity{H->level(1), H->level(2)};
  CHECK_THROWS_AS(hg::verify_axioms(*H, no_identity, {}),
                  hg::ParameterError);
}

namespace {

// Clebsch-Gordan test double with seeded defects. BreakMass drops a
// constituent from delta_1 * delta_2; BreakAssociativity rebalances
// delta_1 * delta_1 onto the identity with the correct total mass, so only
// the associativity scan can see it.
enum class Corruption { BreakMass, BreakAssociativity };

class SeededSu2 final : public hg::Hypergroup {
 public:
  explicit SeededSu2(Corruption mode)
      : Hypergroup(mode == Corruption::BreakMass ? "seeded-su2-mass"
                                                 : "seeded-su2-assoc",
                   1, {0}),
        mode_(mode) {}

  bool contains(const Element& x) const override {
    return x.arity() == 1 && x.coord(0) >= 0;
  }
  Element involution(const Element& x) const override { return x; }
  std::int64_t point_scale(const Element& x) const override {
    return x.coord(0) + 1;
  }
  std::int64_t scale_denominator() const override { return 1; }

  std::vector<Term> structure_terms(const Element& a,
                                    const Element& b) const override {
    const std::int64_t m = a.coord(0), n = b.coord(0);
    if (mode_ == Corruption::BreakAssociativity && m == 1 && n == 1)
      return {{make_scalar(0), 4}};
    std::vector<Term> terms;
    for (std::int64_t k = std::abs(m - n); k <= m + n; k += 2)
      terms.push_back({make_scalar(k), 1});
    if (mode_ == Corruption::BreakMass &&
        ((m == 1 && n == 2) || (m == 2 && n == 1)))
      terms.pop_back();
    return terms;
  }

  ElementSet box(std::int64_t bound) const override {
    ElementSet out;
    for (std::int64_t n = 0; n <= bound; ++n) out.insert(make_scalar(n));
    return out;
  }
  ElementSet default_generators() const override {
    return {make_scalar(1)};
  }

 private:
  Corruption mode_;
};

}  // namespace

TEST_CASE("seeded provider corruption is detected with a witness") {
  SECTION("mass defect lands in the probability axiom") {
    SeededSu2 broken(Corruption::BreakMass);
    const hg::AxiomReport report =
        hg::verify_axioms(broken, broken.box(4), {});
    REQUIRE_FALSE(report.all_passed());
    const hg::AxiomCheck* h1 = report.find("H1 probability");
    REQUIRE(h1 != nullptr);
    CHECK_FALSE(h1->passed);
    CHECK(h1->detail.find("(1, 2)") != std::string::npos);
  }

  SECTION("mass-preserving defect lands in associativity") {
    SeededSu2 broken(Corruption::BreakAssociativity);
    const hg::AxiomReport report =
        hg::verify_axioms(broken, broken.box(4), {});
    REQUIRE_FALSE(report.all_passed());
    const hg::AxiomCheck* h1 = report.find("H1 probability");
    REQUIRE(h1 != nullptr);
    CHECK(h1->passed);
    const hg::AxiomCheck* assoc = report.find("associativity");
    REQUIRE(assoc != nullptr);
    CHECK_FALSE(assoc->passed);
    CHECK(assoc->detail.find("1") != std::string::npos);
  }
}

namespace {

std::string temp_path(const std::string& tag) {
  return std::string("hg_test_") + tag + ".json";
}

}  // namespace

TEST_CASE("cache persistence roundtrip") {
  auto H = hg::build_su2_dual();
  for (std::int64_t m = 0; m <= 3; ++m)
    for (std::int64_t n = m; n <= 3; ++n) H->convolve(H->level(m), H->level(n));
  const std::string path = temp_path("roundtrip");
  hg::cache_store(*H, path);

  auto fresh = hg::build_su2_dual();
  CHECK(fresh->cache_size() == 0);
  CHECK(hg::cache_load(*fresh, path) == 10);
  CHECK(fresh->cache_size() == 10);
  // Elements are tied to their owning instance, so compare values, not
  // measures across instances.
  const hg::Measure& loaded = fresh->convolve(fresh->level(1), fresh->level(1));
  CHECK(loaded.support_size() == 2);
  CHECK(loaded.value_at(fresh->level(0)) == hg::Rational(1, 4));
  CHECK(loaded.value_at(fresh->level(2)) == hg::Rational(3, 4));
  const hg::AxiomReport report = hg::verify_axioms(*fresh, fresh->box(3), {});
  CHECK(report.all_passed());
  std::remove(path.c_str());
}

TEST_CASE("cache loading rejects mismatches and malformed files") {
  const std::string path = temp_path("reject");

  auto cheb1 = hg::build_chebyshev(1);
  cheb1->convolve(cheb1->point({1}), cheb1->point({2}));
  hg::cache_store(*cheb1, path);

  auto cheb2 = hg::build_chebyshev(2);
  CHECK_THROWS_AS(hg::cache_load(*cheb2, path), hg::CacheError);

  {
    nlohmann::json j;
    std::ifstream(path) >> j;
    j["version"] = hg::kCacheFormatVersion + 1;
    std::ofstream(path) << j;
  }
  auto fresh = hg::build_chebyshev(1);
  CHECK_THROWS_AS(hg::cache_load(*fresh, path), hg::CacheError);

  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(hg::cache_load(*fresh, path), hg::CacheError);

  CHECK_THROWS_AS(hg::cache_load(*fresh, "does_not_exist.json"),
                  hg::CacheError);

  auto empty = hg::build_chebyshev(1);
  CHECK_THROWS_AS(hg::cache_store(*empty, path), hg::ParameterError);
  std::remove(path.c_str());
}

TEST_CASE("tampered cache records are detected by the axiom verifier") {
  const std::string path = temp_path("tamper");
  {
    auto H = hg::build_su2_dual();
    for (std::int64_t m = 0; m <= 3; ++m)
      for (std::int64_t n = m; n <= 3; ++n)
        H->convolve(H->level(m), H->level(n));
    hg::cache_store(*H, path);
  }

  auto tamper = [&path](auto mutate) {
    nlohmann::json j;
    std::ifstream(path) >> j;
    bool hit = false;
    for (auto& record : j["records"]) {
      if (record["x"] == nlohmann::json::array({1}) &&
          record["y"] == nlohmann::json::array({2})) {
        mutate(record);
        hit = true;
      }
    }
    REQUIRE(hit);
    std::ofstream(path) << j;
  };

  SECTION("mass-breaking tamper fails the probability axiom") {
    tamper([](nlohmann::json& record) { record["terms"][0][1] = "7"; });
    auto H = hg::build_su2_dual();
    CHECK(hg::cache_load(*H, path) == 10);
    const hg::AxiomReport report = hg::verify_axioms(*H, H->box(3), {});
    REQUIRE_FALSE(report.all_passed());
    const hg::AxiomCheck* h1 = report.find("H1 probability");
    REQUIRE(h1 != nullptr);
    CHECK_FALSE(h1->passed);
  }

  SECTION("mass-preserving tamper fails the cache consistency check") {
    // delta_1 * delta_2 = {1: 1/3, 3: 2/3}; swapping the masses keeps the
    // total at 1 but disagrees with the provider.
    tamper([](nlohmann::json& record) {
      std::swap(record["terms"][0][1], record["terms"][1][1]);
      std::swap(record["terms"][0][2], record["terms"][1][2]);
    });
    auto H = hg::build_su2_dual();
    CHECK(hg::cache_load(*H, path) == 10);
    const hg::AxiomReport report = hg::verify_axioms(*H, H->box(3), {});
    REQUIRE_FALSE(report.all_passed());
    const hg::AxiomCheck* h1 = report.find("H1 probability");
    REQUIRE(h1 != nullptr);
    CHECK(h1->passed);
    const hg::AxiomCheck* cache = report.find("cache consistency");
    REQUIRE(cache != nullptr);
    CHECK_FALSE(cache->passed);
    CHECK(cache->detail.find("(1, 2)") != std::string::npos);
  }
  std::remove(path.c_str());
}
