#pragma once

#include <optional>

#include "propb/constructions/detail.hpp"

namespace propb {

/// w = n / k, x = n mod k, y = k / x, z = k mod x (y, z only when x > 0).
struct MultiCoreParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t w = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;

  static MultiCoreParams make(std::size_t n, std::size_t k) {
    if (k == 0 || k >= n) {
      throw std::invalid_argument("multi_core: need 0 < k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    MultiCoreParams p{n, k, n / k, n % k, 0, 0};
    if (p.x > 0) {
      p.y = k / p.x;
      p.z = k % p.x;
    }
    return p;
  }
};

inline std::uint64_t multi_core_count(const MultiCoreParams& p, std::uint64_t mc, std::uint64_t mk, std::uint64_t mx) {
  using detail::binom_u64;
  using detail::pow_u64;
  const std::uint64_t mkw = pow_u64(mk, p.w);
  std::uint64_t total = p.w * mc * mk;
  if (p.x == 0) return total + mkw;
  total += p.y * mx * mkw;
  if (p.z == 0) return total + mc * pow_u64(mx, p.y);
  return total + binom_u64(p.x + p.z - 1, p.z) * mc * pow_u64(mx, p.y) + binom_u64(p.x + p.z - 1, p.x) * mkw;
}

/**
 * Multi-core construction: an (n-k)-uniform core, w copies H_1..H_w of a
 * k-uniform hypergraph and (when x > 0) y copies H'_1..H'_y of an x-uniform one.
 *
 * Vertex layout: core V_c, A (x+z-1, case x>0 and z>0 only), V_1..V_w, V'_1..V'_y.
 * With E the product of all H_l edge sets and E' the product of all H'_j:
 *   x>0, z>0:  (i) e_c + e_l  (ii) e'_j + E  (iii) e_c + E' + S, S a z-subset of A
 *              (iv) E + S, S an x-subset of A
 *   x>0, z=0:  (i), (ii), (iii) e_c + E'
 *   x=0:       (i), (ii) E
 */
inline Hypergraph multi_core(const Hypergraph& core, const Hypergraph& hk, const std::optional<Hypergraph>& hx,
                             std::size_t k) {
  const std::size_t n = core.uniformity() + k;
  const MultiCoreParams p = MultiCoreParams::make(n, k);
  detail::require_uniformity(hk, k, "k-component");
  if (p.x > 0) {
    if (!hx) throw std::invalid_argument("multi_core: n mod k = " + std::to_string(p.x) + " requires the x-component");
    detail::require_uniformity(*hx, p.x, "x-component");
  } else if (hx) {
    throw std::invalid_argument("multi_core: k divides n, no x-component expected");
  }

  detail::VertexLayout layout;
  const detail::Placed c = detail::place(layout, core);
  const std::size_t a_size = (p.x > 0 && p.z > 0) ? p.x + p.z - 1 : 0;
  const auto A = layout.block(a_size);
  std::vector<detail::Placed> ks, xs;
  for (std::size_t l = 0; l < p.w; ++l) ks.push_back(detail::place(layout, hk));
  for (std::size_t j = 0; j < p.y; ++j) xs.push_back(detail::place(layout, *hx));

  EdgeSetBuilder out(n, layout.size());
  const std::uint64_t expected =
      multi_core_count(p, core.num_edges(), hk.num_edges(), hx ? hx->num_edges() : 0);
  out.reserve(expected);
  auto emit = [&](const std::vector<VertexId>& e) { out.add(e); };

  for (const auto& kl : ks) {
    const detail::Placed parts[] = {c, kl};
    detail::for_each_product(parts, {}, emit);
  }
  if (p.x == 0) {
    detail::for_each_product(ks, {}, emit);
  } else {
    for (const auto& xj : xs) {
      std::vector<detail::Placed> parts{xj};
      parts.insert(parts.end(), ks.begin(), ks.end());
      detail::for_each_product(parts, {}, emit);
    }
    std::vector<detail::Placed> core_and_xs{c};
    core_and_xs.insert(core_and_xs.end(), xs.begin(), xs.end());
    if (p.z == 0) {
      detail::for_each_product(core_and_xs, {}, emit);
    } else {
      std::vector<VertexId> s;
      detail::for_each_subset(a_size, p.z, [&](std::span<const std::size_t> idx) {
        s.clear();
        for (std::size_t i : idx) s.push_back(A[i]);
        detail::for_each_product(core_and_xs, s, emit);
      });
      detail::for_each_subset(a_size, p.x, [&](std::span<const std::size_t> idx) {
        s.clear();
        for (std::size_t i : idx) s.push_back(A[i]);
        detail::for_each_product(ks, s, emit);
      });
    }
  }

  Hypergraph h = std::move(out).build();
  detail::expect_count(h, expected, "multi_core");
  return h;
}

}  // namespace propb
