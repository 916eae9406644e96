#pragma once

#include <cmath>

#include "propb/constructions/abbott_hanson_toft.hpp"
#include "propb/constructions/detail.hpp"

namespace propb {

inline std::uint64_t generalized_aht_count(std::size_t n, std::size_t k, std::uint64_t mc) {
  const std::size_t big_n = n + k - 1;
  return detail::binom_u64(big_n, k) * mc + detail::binom_u64(big_n, k - 1) * aht_frame_edges(n);
}

/**
 * Generalized AHT wrap of an (n-2k)-uniform core with blocks A, B of size n+k-1.
 *
 * Vertex layout: core V_c, A (n+k-1), B (n+k-1). For I a k-subset (step i) or
 * (k-1)-subset (steps ii, iii) of the index set N:
 *   (i)   e + A_I + B_I                                  every core edge e
 *   (ii)  A_K + (B \ (B_K + B_I))     K in N \ I, |K| odd,  1 <= |K| <= n/2
 *   (iii) (A \ (A_K + A_I)) + B_K     K in N \ I, |K| even, 0 <= |K| <= n/2
 * With k = 1 this is exactly abbott_hanson_toft.
 */
inline Hypergraph generalized_aht(const Hypergraph& core, std::size_t k) {
  if (k == 0) throw std::invalid_argument("generalized_aht: k must be positive");
  const std::size_t n = core.uniformity() + 2 * k;
  const std::size_t big_n = n + k - 1;
  detail::VertexLayout layout;
  const detail::Placed c = detail::place(layout, core);
  const auto A = layout.block(big_n);
  const auto B = layout.block(big_n);

  EdgeSetBuilder out(n, layout.size());
  const std::uint64_t expected = generalized_aht_count(n, k, core.num_edges());
  out.reserve(expected);
  auto emit = [&](const std::vector<VertexId>& e) { out.add(e); };

  std::vector<VertexId> prefix;
  detail::for_each_subset(big_n, k, [&](std::span<const std::size_t> I) {
    prefix.clear();
    for (std::size_t i : I) {
      prefix.push_back(A[i]);
      prefix.push_back(B[i]);
    }
    const detail::Placed parts[] = {c};
    detail::for_each_product(parts, prefix, emit);
  });

  std::vector<VertexId> a_rest, b_rest;
  std::vector<char> in_i(big_n);
  detail::for_each_subset(big_n, k - 1, [&](std::span<const std::size_t> I) {
    std::fill(in_i.begin(), in_i.end(), 0);
    for (std::size_t i : I) in_i[i] = 1;
    a_rest.clear();
    b_rest.clear();
    for (std::size_t i = 0; i < big_n; ++i) {
      if (in_i[i]) continue;
      a_rest.push_back(A[i]);
      b_rest.push_back(B[i]);
    }
    detail::for_each_alternating(a_rest, b_rest, n / 2, 0, n / 2, {}, emit);
  });

  Hypergraph h = std::move(out).build();
  detail::expect_count(h, expected, "generalized_aht");
  return h;
}

/// k ~ 0.238 n, the ratio below which the asymptotic analysis of the
/// generalized wrap converges; clamped to 1 <= k and 2k < n.
inline std::size_t gaht_k_heuristic(std::size_t n) {
  if (n < 5) throw std::invalid_argument("gaht_k_heuristic: n must be at least 5");
  std::size_t k = (238 * n + 500) / 1000;
  if (k < 1) k = 1;
  while (k > 1 && 2 * k >= n) --k;
  return k;
}

}  // namespace propb
