#pragma once

// Shared machinery for the constructions: vertex layout, Cartesian products
// of edge families, subset enumeration and count checks.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

/// A generated edge count disagreed with its closed form.
class CountMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace propb

namespace propb::detail {

/// Hands out consecutive vertex ranges in declaration order.
class VertexLayout {
 public:
  VertexId place(std::size_t count) {
    const std::size_t off = next_;
    next_ += count;
    if (next_ > UINT32_MAX) throw std::length_error("vertex space exhausted");
    return static_cast<VertexId>(off);
  }

  /// Consecutive ids for a block of `count` fresh vertices.
  std::vector<VertexId> block(std::size_t count) {
    const VertexId off = place(count);
    std::vector<VertexId> ids(count);
    for (std::size_t i = 0; i < count; ++i) ids[i] = off + static_cast<VertexId>(i);
    return ids;
  }

  std::size_t size() const { return next_; }

 private:
  std::size_t next_ = 0;
};

/// A component hypergraph placed at an offset in the combined vertex space.
struct Placed {
  const Hypergraph* graph;
  VertexId offset;
};

inline Placed place(VertexLayout& layout, const Hypergraph& h) { return {&h, layout.place(h.num_vertices())}; }

template <class F>
void product_rec(std::span<const Placed> parts, std::size_t level, std::vector<VertexId>& buf, F& f) {
  if (level == parts.size()) {
    f(buf);
    return;
  }
  const Placed& p = parts[level];
  const std::size_t base = buf.size();
  for (EdgeView e : *p.graph) {
    for (VertexId v : e) buf.push_back(v + p.offset);
    product_rec(parts, level + 1, buf, f);
    buf.resize(base);
  }
}

/// Calls f(buf) once per tuple of E(parts[0]) x ... x E(parts[last]) with buf
/// holding `prefix` followed by the union of the chosen (shifted) edges.
template <class F>
void for_each_product(std::span<const Placed> parts, std::span<const VertexId> prefix, F&& f) {
  std::vector<VertexId> buf(prefix.begin(), prefix.end());
  product_rec(parts, 0, buf, f);
}

/// Calls f(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/**
 * The alternating A/B family over aligned index arrays a[i], b[i]:
 * for |K| odd, 1 <= |K| <= odd_max:  A_K + (B minus B_K);
 * for |K| even, min_even <= |K| <= even_max:  (A minus A_K) + B_K.
 * `extra` vertices are appended to every edge.
 */
template <class F>
void for_each_alternating(std::span<const VertexId> a, std::span<const VertexId> b, std::size_t odd_max,
                          std::size_t min_even, std::size_t even_max, std::span<const VertexId> extra, F&& f) {
  const std::size_t n = a.size();
  std::vector<VertexId> buf;
  std::vector<char> in_k(n);
  const std::size_t top = std::max(odd_max, even_max);
  for (std::size_t s = 0; s <= top && s <= n; ++s) {
    const bool odd = s % 2 == 1;
    if (odd ? s > odd_max : (s < min_even || s > even_max)) continue;
    for_each_subset(n, s, [&](std::span<const std::size_t> K) {
      std::fill(in_k.begin(), in_k.end(), 0);
      for (std::size_t i : K) in_k[i] = 1;
      buf.assign(extra.begin(), extra.end());
      for (std::size_t i = 0; i < n; ++i) {
        const bool take_a = odd ? in_k[i] != 0 : in_k[i] == 0;
        buf.push_back(take_a ? a[i] : b[i]);
      }
      f(buf);
    });
  }
}

inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > UINT64_MAX) throw std::overflow_error("power overflow");
  }
  return static_cast<std::uint64_t>(r);
}

/// A construction whose families are pairwise disjoint must produce exactly the closed-form count.
inline void expect_count(const Hypergraph& h, std::uint64_t expected, const char* what) {
  if (h.num_edges() != expected) {
    throw CountMismatch(std::string(what) + ": generated " + std::to_string(h.num_edges()) +
                           " distinct edges, closed form gives " + std::to_string(expected));
  }
}

inline void expect_at_most(const Hypergraph& h, std::uint64_t bound, const char* what) {
  if (h.num_edges() > bound) {
    throw CountMismatch(std::string(what) + ": generated " + std::to_string(h.num_edges()) +
                           " distinct edges, above the bound " + std::to_string(bound));
  }
}

inline void require_uniformity(const Hypergraph& h, std::size_t n, const char* role) {
  if (h.uniformity() != n) {
    throw std::invalid_argument(std::string(role) + " must be " + std::to_string(n) + "-uniform, got " +
                                std::to_string(h.uniformity()) + "-uniform");
  }
}

}  // namespace propb::detail
