#pragma once

#include "propb/constructions/detail.hpp"

namespace propb {

/// Closed-form size of the alternating A/B family plus the edge A for block size n:
/// 2^(n-1) for odd n, 2^(n-1) + C(n, n/2)/2 for even n.
inline std::uint64_t aht_frame_edges(std::size_t n) {
  std::uint64_t c = detail::pow_u64(2, n - 1);
  if (n % 2 == 0) c += detail::binom_u64(n, n / 2) / 2;
  return c;
}

/**
 * Abbott-Hanson (odd n) / Toft (even n) wrap of an (n-2)-uniform core.
 *
 * Vertex layout: core V_c, then A = a_1..a_n, then B = b_1..b_n.
 *   (i)   e + {a_j, b_j}            for every core edge e and 1 <= j <= n
 *   (ii)  A_K + (B \ B_K)           |K| odd,  1 <= |K| <= n/2
 *   (iii) (A \ A_K) + B_K           |K| even, 2 <= |K| <= n/2
 *   (iv)  A
 */
inline Hypergraph abbott_hanson_toft(const Hypergraph& core) {
  const std::size_t n = core.uniformity() + 2;
  detail::VertexLayout layout;
  const detail::Placed c = detail::place(layout, core);
  const auto A = layout.block(n);
  const auto B = layout.block(n);

  EdgeSetBuilder out(n, layout.size());
  const std::uint64_t expected = n * core.num_edges() + aht_frame_edges(n);
  out.reserve(expected);

  std::vector<VertexId> buf;
  for (EdgeView e : core) {
    for (std::size_t j = 0; j < n; ++j) {
      buf.clear();
      for (VertexId v : e) buf.push_back(v + c.offset);
      buf.push_back(A[j]);
      buf.push_back(B[j]);
      out.add(buf);
    }
  }
  auto emit = [&](const std::vector<VertexId>& e) { out.add(e); };
  detail::for_each_alternating(A, B, n / 2, 2, n / 2, {}, emit);
  out.add(A);

  Hypergraph h = std::move(out).build();
  detail::expect_count(h, expected, "abbott_hanson_toft");
  return h;
}

}  // namespace propb
