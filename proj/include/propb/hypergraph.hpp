#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace propb {

using VertexId = std::uint32_t;

/// Read-only view of one edge: strictly increasing vertex ids.
using EdgeView = std::span<const VertexId>;

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

using Coloring = std::vector<Color>;

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

class EdgeSetBuilder;

/**
 * Uniform hypergraph with a canonical edge set.
 *
 * Edges are stored row-major in one flat buffer (stride = uniformity), each
 * row strictly increasing, rows in strict lexicographic order. A value of
 * this type can only be produced through EdgeSetBuilder, so every instance
 * is canonical and duplicate-free.
 */
class Hypergraph {
 public:
  class EdgeIterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = EdgeView;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = EdgeView;

    EdgeIterator() = default;
    EdgeIterator(const VertexId* p, std::size_t stride) : p_(p), stride_(stride) {}

    EdgeView operator*() const { return {p_, stride_}; }
    EdgeView operator[](difference_type i) const { return *(*this + i); }
    EdgeIterator& operator++() { p_ += stride_; return *this; }
    EdgeIterator operator++(int) { auto t = *this; ++*this; return t; }
    EdgeIterator& operator--() { p_ -= stride_; return *this; }
    EdgeIterator operator--(int) { auto t = *this; --*this; return t; }
    EdgeIterator& operator+=(difference_type n) { p_ += n * static_cast<difference_type>(stride_); return *this; }
    EdgeIterator& operator-=(difference_type n) { return *this += -n; }
    friend EdgeIterator operator+(EdgeIterator it, difference_type n) { return it += n; }
    friend EdgeIterator operator+(difference_type n, EdgeIterator it) { return it += n; }
    friend EdgeIterator operator-(EdgeIterator it, difference_type n) { return it -= n; }
    friend difference_type operator-(const EdgeIterator& a, const EdgeIterator& b) {
      return (a.p_ - b.p_) / static_cast<difference_type>(a.stride_);
    }
    friend bool operator==(const EdgeIterator& a, const EdgeIterator& b) { return a.p_ == b.p_; }
    friend auto operator<=>(const EdgeIterator& a, const EdgeIterator& b) { return a.p_ <=> b.p_; }

   private:
    const VertexId* p_ = nullptr;
    std::size_t stride_ = 1;
  };

  std::size_t uniformity() const { return uniformity_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return flat_.size() / uniformity_; }

  EdgeView edge(std::size_t i) const { return {flat_.data() + i * uniformity_, uniformity_}; }

  EdgeIterator begin() const { return {flat_.data(), uniformity_}; }
  EdgeIterator end() const { return {flat_.data() + flat_.size(), uniformity_}; }

  std::span<const VertexId> flat() const { return flat_; }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(num_vertices_, 0);
    for (VertexId v : flat_) ++deg[v];
    return deg;
  }

  /// Copy with edge `i` removed (still canonical).
  Hypergraph without_edge(std::size_t i) const {
    if (i >= num_edges()) throw std::out_of_range("without_edge: edge index out of range");
    Hypergraph h = *this;
    auto first = h.flat_.begin() + static_cast<std::ptrdiff_t>(i * uniformity_);
    h.flat_.erase(first, first + static_cast<std::ptrdiff_t>(uniformity_));
    return h;
  }

  /// Image under the vertex map v -> perm[v]; perm must be a permutation.
  Hypergraph relabeled(std::span<const VertexId> perm) const;

  /// Same edges moved into a larger vertex space at `offset`.
  Hypergraph shifted(VertexId offset, std::size_t total_vertices) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend class EdgeSetBuilder;
  Hypergraph(std::size_t uniformity, std::size_t num_vertices, std::vector<VertexId> flat)
      : uniformity_(uniformity), num_vertices_(num_vertices), flat_(std::move(flat)) {}

  std::size_t uniformity_ = 1;
  std::size_t num_vertices_ = 1;
  std::vector<VertexId> flat_;
};

/**
 * Collects edges for one hypergraph and produces the canonical form.
 *
 * add() sorts the incoming vertices and rejects repeats or out-of-range ids;
 * build() sorts rows and drops duplicates, so insertion has set semantics.
 */
class EdgeSetBuilder {
 public:
  EdgeSetBuilder(std::size_t uniformity, std::size_t num_vertices)
      : uniformity_(uniformity), num_vertices_(num_vertices) {
    if (uniformity == 0) throw std::invalid_argument("uniformity must be positive");
    if (num_vertices == 0) throw std::invalid_argument("vertex count must be positive");
    scratch_.reserve(uniformity);
  }

  std::size_t uniformity() const { return uniformity_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t raw_size() const { return flat_.size() / uniformity_; }

  void reserve(std::size_t edges) { flat_.reserve(edges * uniformity_); }

  void add(std::span<const VertexId> edge) {
    if (edge.size() != uniformity_) {
      throw std::invalid_argument("edge has " + std::to_string(edge.size()) +
                                  " vertices, expected " + std::to_string(uniformity_));
    }
    scratch_.assign(edge.begin(), edge.end());
    std::sort(scratch_.begin(), scratch_.end());
    for (std::size_t i = 0; i < scratch_.size(); ++i) {
      if (scratch_[i] >= num_vertices_) {
        throw std::invalid_argument("vertex " + std::to_string(scratch_[i]) + " out of range");
      }
      if (i > 0 && scratch_[i] == scratch_[i - 1]) {
        throw std::invalid_argument("repeated vertex " + std::to_string(scratch_[i]) + " in edge");
      }
    }
    flat_.insert(flat_.end(), scratch_.begin(), scratch_.end());
  }

  void add(std::initializer_list<VertexId> edge) { add(std::span<const VertexId>(edge.begin(), edge.size())); }

  Hypergraph build() && {
    const std::size_t n = uniformity_;
    const std::size_t rows = flat_.size() / n;
    auto row_less = [&](std::uint32_t a, std::uint32_t b) {
      const VertexId* pa = flat_.data() + std::size_t{a} * n;
      const VertexId* pb = flat_.data() + std::size_t{b} * n;
      return std::lexicographical_compare(pa, pa + n, pb, pb + n);
    };
    auto row_equal = [&](std::uint32_t a, std::uint32_t b) {
      const VertexId* pa = flat_.data() + std::size_t{a} * n;
      return std::equal(pa, pa + n, flat_.data() + std::size_t{b} * n);
    };

    bool sorted_unique = true;
    for (std::size_t r = 1; r < rows && sorted_unique; ++r) {
      sorted_unique = row_less(static_cast<std::uint32_t>(r - 1), static_cast<std::uint32_t>(r));
    }
    if (sorted_unique) return Hypergraph(n, num_vertices_, std::move(flat_));

    if (rows > UINT32_MAX) throw std::length_error("too many edges");
    std::vector<std::uint32_t> order(rows);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), row_less);
    order.erase(std::unique(order.begin(), order.end(), row_equal), order.end());

    std::vector<VertexId> out;
    out.reserve(order.size() * n);
    for (std::uint32_t r : order) {
      const VertexId* p = flat_.data() + std::size_t{r} * n;
      out.insert(out.end(), p, p + n);
    }
    flat_ = {};
    return Hypergraph(n, num_vertices_, std::move(out));
  }

 private:
  std::size_t uniformity_;
  std::size_t num_vertices_;
  std::vector<VertexId> flat_;
  std::vector<VertexId> scratch_;
};

inline Hypergraph Hypergraph::relabeled(std::span<const VertexId> perm) const {
  if (perm.size() != num_vertices_) throw std::invalid_argument("relabeled: permutation size mismatch");
  std::vector<bool> seen(num_vertices_, false);
  for (VertexId v : perm) {
    if (v >= num_vertices_ || seen[v]) throw std::invalid_argument("relabeled: not a permutation");
    seen[v] = true;
  }
  EdgeSetBuilder b(uniformity_, num_vertices_);
  b.reserve(num_edges());
  std::vector<VertexId> buf(uniformity_);
  for (EdgeView e : *this) {
    for (std::size_t i = 0; i < e.size(); ++i) buf[i] = perm[e[i]];
    b.add(buf);
  }
  return std::move(b).build();
}

inline Hypergraph Hypergraph::shifted(VertexId offset, std::size_t total_vertices) const {
  if (std::size_t{offset} + num_vertices_ > total_vertices) {
    throw std::invalid_argument("shifted: target vertex space too small");
  }
  std::vector<VertexId> out(flat_);
  for (VertexId& v : out) v += offset;
  // Shifting preserves row order, so the result is still canonical.
  return Hypergraph(uniformity_, total_vertices, std::move(out));
}

/// Unvalidated edge list, e.g. as read from user input before canonicalization.
struct EdgeList {
  std::size_t uniformity = 1;
  std::size_t num_vertices = 1;
  std::vector<std::vector<VertexId>> edges;
};

inline Hypergraph canonicalize(const EdgeList& raw) {
  EdgeSetBuilder b(raw.uniformity, raw.num_vertices);
  b.reserve(raw.edges.size());
  for (const auto& e : raw.edges) b.add(e);
  return std::move(b).build();
}

inline Hypergraph canonicalize(const Hypergraph& h) {
  EdgeSetBuilder b(h.uniformity(), h.num_vertices());
  b.reserve(h.num_edges());
  for (EdgeView e : h) b.add(e);
  return std::move(b).build();
}

inline EdgeList to_edge_list(const Hypergraph& h) {
  EdgeList out{h.uniformity(), h.num_vertices(), {}};
  out.edges.reserve(h.num_edges());
  for (EdgeView e : h) out.edges.emplace_back(e.begin(), e.end());
  return out;
}

/// First edge (in canonical order) whose vertices all share one color.
inline std::optional<EdgeView> has_monochromatic_edge(const Hypergraph& h, const Coloring& c) {
  if (c.size() != h.num_vertices()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " entries, hypergraph has " +
                                std::to_string(h.num_vertices()) + " vertices");
  }
  for (EdgeView e : h) {
    const Color first = c[e.front()];
    if (std::all_of(e.begin() + 1, e.end(), [&](VertexId v) { return c[v] == first; })) return e;
  }
  return std::nullopt;
}

/// Parts relabeled into one shared vertex space; part i's vertex j becomes offsets[i] + j.
struct DisjointUnion {
  std::size_t num_vertices = 0;
  std::vector<VertexId> offsets;
  std::vector<Hypergraph> parts;
};

inline DisjointUnion disjoint_union(std::span<const Hypergraph> parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
  DisjointUnion out;
  std::size_t total = 0;
  for (const Hypergraph& h : parts) {
    out.offsets.push_back(static_cast<VertexId>(total));
    total += h.num_vertices();
  }
  out.num_vertices = total;
  out.parts.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) out.parts.push_back(parts[i].shifted(out.offsets[i], total));
  return out;
}

inline std::string to_string(const Coloring& c) {
  std::string s;
  s.reserve(c.size());
  for (Color x : c) s.push_back(x == Color::Red ? 'R' : 'B');
  return s;
}

}  // namespace propb
