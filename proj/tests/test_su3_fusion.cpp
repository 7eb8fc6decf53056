#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <utility>

#include "hg/catalog/su3_fusion.hpp"
#include "support/oracles.hpp"

namespace {

std::map<std::pair<int, int>, std::int64_t> as_map(
    const std::vector<hg::Su3Component>& parts) {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& c : parts)
    out[{static_cast<int>(c.p), static_cast<int>(c.q)}] = c.mult;
  return out;
}

}  // namespace

TEST_CASE("weyl dimension formula values") {
  CHECK(hg::su3_dimension(0, 0) == 1);
  CHECK(hg::su3_dimension(1, 0) == 3);
  CHECK(hg::su3_dimension(0, 1) == 3);
  CHECK(hg::su3_dimension(1, 1) == 8);
  CHECK(hg::su3_dimension(3, 0) == 10);
  CHECK(hg::su3_dimension(2, 2) == 27);
  CHECK_THROWS_AS(hg::su3_dimension(-1, 0), hg::ParameterError);
}

TEST_CASE("adjoint square decomposition") {
  const auto parts = as_map(hg::su3_tensor_decompose(1, 1, 1, 1));
  const std::map<std::pair<int, int>, std::int64_t> expected{
      {{0, 0}, 1}, {{1, 1}, 2}, {{3, 0}, 1}, {{0, 3}, 1}, {{2, 2}, 1}};
  CHECK(parts == expected);
}

TEST_CASE("fundamental products") {
  CHECK(as_map(hg::su3_tensor_decompose(1, 0, 0, 1)) ==
        std::map<std::pair<int, int>, std::int64_t>{{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(as_map(hg::su3_tensor_decompose(1, 0, 1, 0)) ==
        std::map<std::pair<int, int>, std::int64_t>{{{2, 0}, 1}, {{0, 1}, 1}});
  CHECK(as_map(hg::su3_tensor_decompose(0, 0, 4, 2)) ==
        std::map<std::pair<int, int>, std::int64_t>{{{4, 2}, 1}});
}

TEST_CASE("littlewood-richardson matches the stripping oracle") {
  for (int p1 = 0; p1 <= 4; ++p1)
    for (int q1 = 0; q1 <= 4; ++q1)
      for (int p2 = 0; p2 <= 4; ++p2)
        for (int q2 = 0; q2 <= 4; ++q2) {
          const auto lr = as_map(hg::su3_tensor_decompose(p1, q1, p2, q2));
          const auto oracle =
              hg::test::stripping_decompose(p1, q1, p2, q2);
          INFO("(" << p1 << "," << q1 << ") x (" << p2 << "," << q2 << ")");
          CHECK(lr == oracle);
        }
}

TEST_CASE("decomposition symmetries and dimension identity") {
  for (int p1 = 0; p1 <= 6; ++p1)
    for (int q1 = 0; q1 <= 6; ++q1)
      for (int p2 = 0; p2 <= 6; ++p2)
        for (int q2 = 0; q2 <= 6; ++q2) {
          const auto direct = as_map(hg::su3_tensor_decompose(p1, q1, p2, q2));

          std::int64_t total = 0;
          for (const auto& [pq, m] : direct)
            total += m * hg::su3_dimension(pq.first, pq.second);
          CHECK(total ==
                hg::su3_dimension(p1, q1) * hg::su3_dimension(p2, q2));

          // factor swap
          CHECK(direct == as_map(hg::su3_tensor_decompose(p2, q2, p1, q1)));

          // conjugating both factors conjugates every constituent
          const auto conj = as_map(hg::su3_tensor_decompose(q1, p1, q2, p2));
          std::map<std::pair<int, int>, std::int64_t> flipped;
          for (const auto& [pq, m] : direct) flipped[{pq.second, pq.first}] = m;
          CHECK(conj == flipped);
        }
}

TEST_CASE("multiplicity of the trivial constituent detects duality") {
  // (0,0) appears in (p1,q1) x (p2,q2) iff the second factor is the dual of
  // the first, and then exactly once.
  for (int p1 = 0; p1 <= 5; ++p1)
    for (int q1 = 0; q1 <= 5; ++q1)
      for (int p2 = 0; p2 <= 5; ++p2)
        for (int q2 = 0; q2 <= 5; ++q2) {
          const auto parts = as_map(hg::su3_tensor_decompose(p1, q1, p2, q2));
          const auto it = parts.find({0, 0});
          const std::int64_t m = it == parts.end() ? 0 : it->second;
          CHECK(m == ((p1 == q2 && q1 == p2) ? 1 : 0));
        }
}
