#pragma once

// Three refinements of the Abbott-Hanson-Toft wrap.

#include "propb/constructions/abbott_hanson_toft.hpp"
#include "propb/constructions/detail.hpp"

namespace propb {

/**
 * 8-uniform construction from two identical 3-uniform hypergraphs h1, h2 and
 * a 5-uniform h3.
 *
 * Vertex layout: A (8), B (8), V_1, V_2, V_3.
 *   (i)   e1 + e3        (ii)  e2 + e3        (iii) A
 *   (iv)  A_K + (B \ B_K),  |K| odd,  1 <= |K| <= 3
 *   (v)   (A \ A_K) + B_K,  |K| even, 2 <= |K| <= 4
 *   (vi)  {a_i, b_i} + e1 + e2
 */
inline Hypergraph mathews_first(const Hypergraph& h1, const Hypergraph& h2, const Hypergraph& h3) {
  detail::require_uniformity(h1, 3, "first component");
  detail::require_uniformity(h2, 3, "second component");
  detail::require_uniformity(h3, 5, "third component");
  if (!(h1 == h2)) throw std::invalid_argument("mathews_first: the two 3-uniform components must be identical");

  constexpr std::size_t n = 8;
  detail::VertexLayout layout;
  const auto A = layout.block(n);
  const auto B = layout.block(n);
  const detail::Placed p1 = detail::place(layout, h1);
  const detail::Placed p2 = detail::place(layout, h2);
  const detail::Placed p3 = detail::place(layout, h3);

  EdgeSetBuilder out(n, layout.size());
  auto emit = [&](const std::vector<VertexId>& e) { out.add(e); };

  const detail::Placed s1[] = {p1, p3};
  detail::for_each_product(s1, {}, emit);
  const detail::Placed s2[] = {p2, p3};
  detail::for_each_product(s2, {}, emit);
  out.add(A);
  detail::for_each_alternating(A, B, 3, 2, 4, {}, emit);
  const detail::Placed s6[] = {p1, p2};
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId pair[] = {A[i], B[i]};
    detail::for_each_product(s6, pair, emit);
  }

  Hypergraph h = std::move(out).build();
  const std::uint64_t m3 = h1.num_edges(), m5 = h3.num_edges();
  // 1 + (C(8,1) + C(8,3)) + (C(8,2) + C(8,4)) = 2^7 + C(8,4)/2
  detail::expect_count(h, 2 * m3 * m5 + 8 * m3 * m3 + 128 + 35, "mathews_first");
  return h;
}

/// Closed-form edge count of the swap-ordering construction.
inline std::uint64_t mathews_second_count(std::size_t n, std::uint64_t mc) {
  std::uint64_t c = (n + 1) * detail::pow_u64(2, n - 2) + (n - 1) * mc;
  if (n % 2 == 0) c += detail::binom_u64(n, n / 2) / 2 + (n - 1) * detail::binom_u64(n - 2, (n - 2) / 2);
  return c;
}

/**
 * AHT variant with swap orderings B^p (b_1 and b_p exchanged).
 *
 * Vertex layout: core V_c, A (n), B (n).
 *   (i)   e + {a_j, b_j}              2 <= j <= n
 *   (ii)  A_K + (B \ B^p_K)           every p, |K| odd,  1 <= |K| <= n/2
 *   (iii) (A \ A_K) + B^p_K           every p, |K| even, 2 <= |K| <= n/2
 *   (iv)  A
 * B^p is an index permutation over the same B vertices, never a copy.
 */
inline Hypergraph mathews_second(const Hypergraph& core) {
  const std::size_t n = core.uniformity() + 2;
  detail::VertexLayout layout;
  const detail::Placed c = detail::place(layout, core);
  const auto A = layout.block(n);
  const auto B = layout.block(n);

  EdgeSetBuilder out(n, layout.size());
  auto emit = [&](const std::vector<VertexId>& e) { out.add(e); };

  std::vector<VertexId> buf;
  for (EdgeView e : core) {
    for (std::size_t j = 1; j < n; ++j) {
      buf.clear();
      for (VertexId v : e) buf.push_back(v + c.offset);
      buf.push_back(A[j]);
      buf.push_back(B[j]);
      out.add(buf);
    }
  }
  std::vector<VertexId> w(n);
  for (std::size_t p = 0; p < n; ++p) {
    w = B;
    std::swap(w[0], w[p]);
    detail::for_each_alternating(A, w, n / 2, 2, n / 2, {}, emit);
  }
  out.add(A);

  Hypergraph h = std::move(out).build();
  detail::expect_count(h, mathews_second_count(n, core.num_edges()), "mathews_second");
  return h;
}

/// Edge count of the A'/B' layer construction, matching the generated
/// hypergraph for both parities (leading term 2^(n-3)).
inline std::uint64_t mathews_third_count(std::size_t n, std::uint64_t mc) {
  std::uint64_t c = (n + 4) * detail::pow_u64(2, n - 3) + (n - 2) * mc;
  if (n % 2 == 0) c += n * detail::binom_u64(n - 2, (n - 2) / 2) / 2 + detail::binom_u64(n, n / 2) / 2;
  return c;
}

/**
 * AHT variant with a second, smaller A'/B' frame attached to every {a_i, b_i}.
 *
 * Vertex layout: core V_c, A (n), B (n), A' (n-2), B' (n-2).
 *   (i)   e + {a'_j, b'_j}                      1 <= j <= n-2
 *   (ii)  A
 *   (iii) A_K + (B \ B_K)                        |K| odd,  1 <= |K| <= n/2
 *   (iv)  (A \ A_K) + B_K                        |K| even, 2 <= |K| <= n/2
 *   (v)   A' + {a_i, b_i}
 *   (vi)  A'_L + (B' \ B'_L) + {a_i, b_i}        |L| odd,  1 <= |L| <= (n-2)/2
 *   (vii) (A' \ A'_L) + B'_L + {a_i, b_i}        |L| even, 2 <= |L| <= (n-2)/2
 */
inline Hypergraph mathews_third(const Hypergraph& core) {
  const std::size_t n = core.uniformity() + 2;
  detail::VertexLayout layout;
  const detail::Placed c = detail::place(layout, core);
  const auto A = layout.block(n);
  const auto B = layout.block(n);
  const auto A2 = layout.block(n - 2);
  const auto B2 = layout.block(n - 2);

  EdgeSetBuilder out(n, layout.size());
  auto emit = [&](const std::vector<VertexId>& e) { out.add(e); };

  std::vector<VertexId> buf;
  for (EdgeView e : core) {
    for (std::size_t j = 0; j < n - 2; ++j) {
      buf.clear();
      for (VertexId v : e) buf.push_back(v + c.offset);
      buf.push_back(A2[j]);
      buf.push_back(B2[j]);
      out.add(buf);
    }
  }
  out.add(A);
  detail::for_each_alternating(A, B, n / 2, 2, n / 2, {}, emit);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId pair[] = {A[i], B[i]};
    buf.assign(A2.begin(), A2.end());
    buf.push_back(A[i]);
    buf.push_back(B[i]);
    out.add(buf);
    detail::for_each_alternating(A2, B2, (n - 2) / 2, 2, (n - 2) / 2, pair, emit);
  }

  Hypergraph h = std::move(out).build();
  detail::expect_count(h, mathews_third_count(n, core.num_edges()), "mathews_third");
  return h;
}

}  // namespace propb
