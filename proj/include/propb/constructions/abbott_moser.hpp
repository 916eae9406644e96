#pragma once

#include "propb/constructions/detail.hpp"

namespace propb {

/**
 * Product construction: every vertex of `outer` is replaced by a private copy
 * of `inner`, and every outer edge {v_1..v_a} yields all unions e_1 + ... + e_a
 * with e_i an edge of the copy at v_i.
 *
 * Layout: copy of `inner` for outer vertex v occupies [v*|V_b|, (v+1)*|V_b|).
 * Result is (a*b)-uniform with |E_a| * |E_b|^a edges.
 */
inline Hypergraph abbott_moser(const Hypergraph& outer, const Hypergraph& inner) {
  const std::size_t a = outer.uniformity();
  const std::size_t vb = inner.num_vertices();
  EdgeSetBuilder out(a * inner.uniformity(), outer.num_vertices() * vb);
  const std::uint64_t expected = outer.num_edges() * detail::pow_u64(inner.num_edges(), a);
  out.reserve(expected);

  std::vector<detail::Placed> parts(a);
  for (EdgeView e : outer) {
    for (std::size_t i = 0; i < a; ++i) parts[i] = {&inner, static_cast<VertexId>(e[i] * vb)};
    detail::for_each_product(parts, {}, [&](const std::vector<VertexId>& buf) { out.add(buf); });
  }
  Hypergraph h = std::move(out).build();
  detail::expect_count(h, expected, "abbott_moser");
  return h;
}

}  // namespace propb
