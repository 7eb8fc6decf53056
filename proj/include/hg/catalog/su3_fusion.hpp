#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hg/errors.hpp"

namespace hg {

// Tensor-product decomposition for SU(3) irreducibles labelled by Dynkin
// coordinates (p, q), i.e. highest weight p*omega1 + q*omega2.

inline std::int64_t su3_dimension(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) throw ParameterError("su3 weight coordinates must be >= 0");
  // (p+1)(q+1)(p+q+2) is always even, so the division is exact.
  return (p + 1) * (q + 1) * (p + q + 2) / 2;
}

struct Su3Component {
  std::int64_t p, q;
  std::int64_t mult;
};

// Littlewood-Richardson expansion specialised to SU(3). The weight (p, q)
// corresponds to the three-row partition (p+q, q, 0); the second factor
// contributes a two-row skew filling with a1+a2+a3 ones and b2+b3 twos,
// subject to horizontal-strip and lattice-word constraints. Columns of
// height 3 are stripped at the end (nu is reduced mod determinant columns).
inline std::vector<Su3Component> su3_tensor_decompose(std::int64_t p1,
                                                      std::int64_t q1,
                                                      std::int64_t p2,
                                                      std::int64_t q2) {
  if (p1 < 0 || q1 < 0 || p2 < 0 || q2 < 0)
    throw ParameterError("su3 weight coordinates must be >= 0");
  const std::int64_t l1 = p1 + q1, l2 = q1;  // l3 = 0
  const std::int64_t m1 = p2 + q2, m2 = q2;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> acc;
  for (std::int64_t a2 = 0; a2 <= std::min(m1, l1 - l2); ++a2) {
    for (std::int64_t a3 = 0; a3 <= std::min(m1 - a2, l2); ++a3) {
      const std::int64_t a1 = m1 - a2 - a3;
      const std::int64_t k1 = l1 + a1, k2 = l2 + a2, k3 = a3;
      if (k1 < k2 || k2 < k3) continue;
      for (std::int64_t b2 = 0; b2 <= std::min(m2, k1 - k2); ++b2) {
        const std::int64_t b3 = m2 - b2;
        if (b3 < 0 || b3 > k2 - k3) continue;
        // Lattice word read right to left, top to bottom: every prefix must
        // hold at least as many ones as twos.
        if (b2 > a1 || b2 + b3 > a1 + a2) continue;
        const std::int64_t n1 = k1, n2 = k2 + b2, n3 = k3 + b3;
        if (n1 < n2 || n2 < n3) continue;
        acc[{n1 - n2, n2 - n3}] += 1;
      }
    }
  }
  std::vector<Su3Component> out;
  out.reserve(acc.size());
  for (const auto& [pq, m] : acc) out.push_back({pq.first, pq.second, m});
  return out;
}

}  // namespace hg
