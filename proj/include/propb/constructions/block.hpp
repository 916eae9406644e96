#pragma once

#include <numeric>

#include "propb/constructions/abbott_hanson_toft.hpp"
#include "propb/constructions/detail.hpp"

namespace propb {

/// Core plus t block hypergraphs; each block is used twice (H_i and its copy H'_i).
struct BlockSpec {
  Hypergraph core;                 // (n - 2k)-uniform
  std::vector<Hypergraph> blocks;  // k_i-uniform, k_i >= k, sum k_i >= n
  std::size_t k = 1;

  std::size_t target_uniformity() const { return core.uniformity() + 2 * k; }
};

/// |E_c| * sum |E_i|^2 + c_t * prod |E_i|, c_t = 2^(t-1) (+ C(t, t/2)/2 for even t).
inline std::uint64_t block_bound(const BlockSpec& spec) {
  std::uint64_t squares = 0, prod = 1;
  for (const auto& b : spec.blocks) {
    squares += b.num_edges() * b.num_edges();
    prod *= b.num_edges();
  }
  return spec.core.num_edges() * squares + aht_frame_edges(spec.blocks.size()) * prod;
}

/**
 * Block construction. Every generated super-edge has at least n vertices and
 * is cut down to its n smallest vertex ids, then deduplicated.
 *
 * Vertex layout: core V_c, V_1..V_t, V'_1..V'_t.
 *   (i)   e_c + e_j + e'_j                    1 <= j <= t
 *   (ii)  A_P x B_(not P)    |P| odd,  1 <= |P| <= t/2
 *   (iii) A_(not P) x B_P    |P| even, 0 <= |P| <= t/2
 * where A_P is the product of the H_i edge sets over i in P and B_P likewise over H'_i.
 */
inline Hypergraph block(const BlockSpec& spec) {
  const std::size_t n = spec.target_uniformity();
  const std::size_t t = spec.blocks.size();
  if (t == 0) throw std::invalid_argument("block: at least one block required");
  std::size_t sum = 0;
  for (const auto& b : spec.blocks) {
    if (b.uniformity() < spec.k) {
      throw std::invalid_argument("block: block uniformity " + std::to_string(b.uniformity()) + " below k = " +
                                  std::to_string(spec.k));
    }
    sum += b.uniformity();
  }
  if (sum < n) {
    throw std::invalid_argument("block: block uniformities sum to " + std::to_string(sum) + ", need at least " +
                                std::to_string(n));
  }

  detail::VertexLayout layout;
  const detail::Placed c = detail::place(layout, spec.core);
  std::vector<detail::Placed> hs, hps;
  for (const auto& b : spec.blocks) hs.push_back(detail::place(layout, b));
  for (const auto& b : spec.blocks) hps.push_back(detail::place(layout, b));

  EdgeSetBuilder out(n, layout.size());
  auto emit = [&](std::vector<VertexId> e) {
    std::sort(e.begin(), e.end());
    out.add(std::span<const VertexId>(e.data(), n));
  };

  for (std::size_t j = 0; j < t; ++j) {
    const detail::Placed parts[] = {c, hs[j], hps[j]};
    detail::for_each_product(parts, {}, emit);
  }
  std::vector<detail::Placed> parts;
  for (std::size_t s = 0; s <= t / 2; ++s) {
    detail::for_each_subset(t, s, [&](std::span<const std::size_t> P) {
      std::vector<char> in_p(t, 0);
      for (std::size_t i : P) in_p[i] = 1;
      const bool odd = s % 2 == 1;
      parts.clear();
      // odd: H_i for i in P, H'_i otherwise; even: H_i for i not in P, H'_i for i in P
      for (std::size_t i = 0; i < t; ++i) parts.push_back((in_p[i] != 0) == odd ? hs[i] : hps[i]);
      detail::for_each_product(parts, {}, emit);
    });
  }

  Hypergraph h = std::move(out).build();
  detail::expect_at_most(h, block_bound(spec), "block");
  return h;
}

/// The (k-1)-sets obtained from the edges of H_1 = abbott_hanson_toft(h1c) by
/// the modified block reduction, in H_1's vertex space.
struct ReducedFirstBlock {
  Hypergraph first_block;       // H_1 itself
  Hypergraph reduced;           // distinct h' sets, (k-1)-uniform
  std::size_t from_core = 0;    // distinct h' with h of type (i)
  std::size_t from_frame = 0;   // distinct h' from the A/B frame edges
};

/**
 * h' reduction of the AHT hypergraph built on the (k-1)-uniform `h1c`
 * (H_1 has layout V_1c, A = a_1..a_(k+1), B = b_1..b_(k+1)):
 *   e + {a_i, b_i}            ->  e
 *   frame edges and A         ->  drop a_k, a_(k+1), b_k, b_(k+1)
 * Every frame edge holds exactly one of a_i, b_i per index, so exactly two of
 * the four dropped vertices are present and h' has k-1 vertices.
 */
inline ReducedFirstBlock reduce_first_block(const Hypergraph& h1c) {
  const std::size_t k = h1c.uniformity() + 1;
  Hypergraph h1 = abbott_hanson_toft(h1c);
  const VertexId core_end = static_cast<VertexId>(h1c.num_vertices());
  const VertexId a_base = core_end;
  const VertexId b_base = core_end + static_cast<VertexId>(k + 1);
  const VertexId dropped[] = {a_base + static_cast<VertexId>(k - 1), a_base + static_cast<VertexId>(k),
                              b_base + static_cast<VertexId>(k - 1), b_base + static_cast<VertexId>(k)};

  EdgeSetBuilder core_part(k - 1, h1.num_vertices());
  EdgeSetBuilder frame_part(k - 1, h1.num_vertices());
  std::vector<VertexId> buf;
  for (EdgeView e : h1) {
    buf.clear();
    if (e.front() < core_end) {
      for (VertexId v : e)
        if (v < core_end) buf.push_back(v);
      core_part.add(buf);
    } else {
      for (VertexId v : e)
        if (std::find(std::begin(dropped), std::end(dropped), v) == std::end(dropped)) buf.push_back(v);
      if (buf.size() != k - 1) throw std::logic_error("reduce_first_block: h' has wrong size");
      frame_part.add(buf);
    }
  }
  Hypergraph from_core = std::move(core_part).build();
  Hypergraph from_frame = std::move(frame_part).build();

  EdgeSetBuilder all(k - 1, h1.num_vertices());
  for (EdgeView e : from_core) all.add(e);
  for (EdgeView e : from_frame) all.add(e);
  return {std::move(h1), std::move(all).build(), from_core.num_edges(), from_frame.num_edges()};
}

/// (|E_1c| + 2^(k-1)) |E_c| |E'_1| + 2 |E_c| m_k^2 + 2 |E_1| m_k^2 + 2 |E'_1| m_k^2
inline std::uint64_t modified_block_bound(std::size_t k, std::uint64_t m_c, std::uint64_t m_1c, std::uint64_t m_1,
                                          std::uint64_t m_1p, std::uint64_t m_k) {
  const std::uint64_t mk2 = m_k * m_k;
  return (m_1c + detail::pow_u64(2, k - 1)) * m_c * m_1p + 2 * m_c * mk2 + 2 * m_1 * mk2 + 2 * m_1p * mk2;
}

/**
 * Modified block construction for n = 3k + 1.
 *
 * hc, h1p: (k+1)-uniform; h1c: (k-1)-uniform AHT core of H_1; hkk: k-uniform,
 * copied as H_2, H'_2, H_3, H'_3.
 * Vertex layout: V_c, H_1 (= V_1c, A, B), V'_1, V_2, V'_2, V_3, V'_3.
 *   (a) e_c + h'(e_1) + e'_1     (b) e_c + e_2 + e'_2     (c) e_c + e_3 + e'_3
 *   (d) e_1 + e'_2 + e'_3        (e) e_2 + e'_1 + e'_3    (f) e_3 + e'_1 + e'_2
 *   (g) e_1 + e_2 + e_3
 */
inline Hypergraph modified_block(std::size_t k, const Hypergraph& hc, const Hypergraph& h1c, const Hypergraph& h1p,
                                 const Hypergraph& hkk) {
  if (k < 2) throw std::invalid_argument("modified_block: k must be at least 2");
  detail::require_uniformity(hc, k + 1, "core");
  detail::require_uniformity(h1c, k - 1, "first-block core");
  detail::require_uniformity(h1p, k + 1, "first-block partner");
  detail::require_uniformity(hkk, k, "k-block");
  const std::size_t n = 3 * k + 1;

  const ReducedFirstBlock r = reduce_first_block(h1c);
  detail::VertexLayout layout;
  const detail::Placed c = detail::place(layout, hc);
  const detail::Placed h1 = detail::place(layout, r.first_block);
  const detail::Placed h1_reduced{&r.reduced, h1.offset};
  const detail::Placed h1p_ = detail::place(layout, h1p);
  const detail::Placed h2 = detail::place(layout, hkk);
  const detail::Placed h2p = detail::place(layout, hkk);
  const detail::Placed h3 = detail::place(layout, hkk);
  const detail::Placed h3p = detail::place(layout, hkk);

  EdgeSetBuilder out(n, layout.size());
  auto emit = [&](const std::vector<VertexId>& e) { out.add(e); };
  auto product = [&](std::initializer_list<detail::Placed> parts) {
    detail::for_each_product(std::span<const detail::Placed>(parts.begin(), parts.size()), {}, emit);
  };

  product({c, h1_reduced, h1p_});
  product({c, h2, h2p});
  product({c, h3, h3p});
  product({h1, h2p, h3p});
  product({h2, h1p_, h3p});
  product({h3, h1p_, h2p});
  product({h1, h2, h3});

  Hypergraph h = std::move(out).build();
  detail::expect_at_most(h,
                         modified_block_bound(k, hc.num_edges(), h1c.num_edges(), r.first_block.num_edges(),
                                              h1p.num_edges(), hkk.num_edges()),
                         "modified_block");
  return h;
}

}  // namespace propb
