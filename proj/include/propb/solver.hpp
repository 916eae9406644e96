#pragma once

// 2-colorability decision: bitmask enumeration for small vertex counts and
// backtracking with not-all-equal propagation beyond.

#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

enum class VerdictKind { Colorable, NonColorable, Unknown };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Colorable: return "colorable";
    case VerdictKind::NonColorable: return "non-colorable";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

enum class Engine { Auto, Exhaustive, Backtracking };

struct SearchStats {
  std::uint64_t nodes = 0;  // colorings scanned (exhaustive) or branch decisions (backtracking)
  std::chrono::duration<double> elapsed{0};
  Engine engine = Engine::Auto;
};

struct ColorabilityVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Coloring> witness;
  SearchStats stats;
};

struct SolveBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  std::chrono::duration<double> max_seconds{std::numeric_limits<double>::infinity()};
  std::size_t exhaustive_vertex_cap = 24;
};

/// Audits a coloring without touching any solver state.
inline bool verify_witness(const Hypergraph& h, const Coloring& c) { return !has_monochromatic_edge(h, c); }

namespace detail {

using Clock = std::chrono::steady_clock;

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Hypergraph& h) : h_(h) {
    if (h.num_vertices() > 63) throw std::invalid_argument("exhaustive search supports at most 63 vertices");
    masks_.reserve(h.num_edges());
    for (EdgeView e : h) {
      std::uint64_t m = 0;
      for (VertexId v : e) m |= std::uint64_t{1} << v;
      masks_.push_back(m);
    }
  }

  // Vertex 0 stays Red (bit clear): swapping colors maps proper colorings to proper colorings.
  ColorabilityVerdict run(const SolveBudget& budget) {
    const auto start = Clock::now();
    ColorabilityVerdict out;
    out.stats.engine = Engine::Exhaustive;
    const std::size_t nv = h_.num_vertices();
    const std::uint64_t total = std::uint64_t{1} << (nv - 1);
    for (std::uint64_t i = 0; i < total; ++i) {
      if (out.stats.nodes >= budget.max_nodes ||
          ((i & 0xFFFF) == 0 && i != 0 && Clock::now() - start > budget.max_seconds)) {
        out.kind = VerdictKind::Unknown;
        out.stats.elapsed = Clock::now() - start;
        return out;
      }
      ++out.stats.nodes;
      const std::uint64_t blue = i << 1;
      bool proper = true;
      for (std::uint64_t m : masks_) {
        const std::uint64_t hit = blue & m;
        if (hit == 0 || hit == m) {
          proper = false;
          break;
        }
      }
      if (proper) {
        Coloring c(nv);
        for (std::size_t v = 0; v < nv; ++v) c[v] = (blue >> v) & 1 ? Color::Blue : Color::Red;
        out.kind = VerdictKind::Colorable;
        out.witness = std::move(c);
        out.stats.elapsed = Clock::now() - start;
        return out;
      }
    }
    out.kind = VerdictKind::NonColorable;
    out.stats.elapsed = Clock::now() - start;
    return out;
  }

 private:
  const Hypergraph& h_;
  std::vector<std::uint64_t> masks_;
};

/**
 * Chronological backtracking over a static order (descending degree, ties by
 * index). Each edge tracks how many of its vertices are Red and Blue; an edge
 * with n-1 vertices of one color and none of the other forces its last vertex.
 */
class BacktrackingSearch {
 public:
  explicit BacktrackingSearch(const Hypergraph& h) : h_(h), n_(h.uniformity()) {
    const std::size_t nv = h.num_vertices();
    const auto deg = h.degrees();
    order_.resize(nv);
    std::iota(order_.begin(), order_.end(), VertexId{0});
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) { return deg[a] > deg[b]; });
    rank_.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) rank_[order_[i]] = static_cast<std::uint32_t>(i);
    incidence_start_.assign(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) incidence_start_[v + 1] = incidence_start_[v] + deg[v];
    incidence_.resize(incidence_start_[nv]);
    std::vector<std::size_t> fill(incidence_start_.begin(), incidence_start_.end() - 1);
    for (std::size_t e = 0; e < h.num_edges(); ++e)
      for (VertexId v : h.edge(e)) incidence_[fill[v]++] = static_cast<std::uint32_t>(e);
    count_.assign(h.num_edges(), {0, 0});
    color_.assign(nv, kUnassigned);
  }

  ColorabilityVerdict run(const SolveBudget& budget) {
    const auto start = Clock::now();
    ColorabilityVerdict out;
    out.stats.engine = Engine::Backtracking;
    auto finish = [&](VerdictKind k) {
      out.kind = k;
      out.stats.elapsed = Clock::now() - start;
      return out;
    };

    struct Frame {
      VertexId v;
      std::uint8_t color;
      std::size_t mark;
    };
    std::vector<Frame> stack;
    bool descend = true;
    while (true) {
      if (descend) {
        const auto v = next_unassigned();
        if (!v) {
          Coloring c(color_.size());
          for (std::size_t i = 0; i < c.size(); ++i) c[i] = color_[i] == 1 ? Color::Blue : Color::Red;
          out.witness = std::move(c);
          return finish(VerdictKind::Colorable);
        }
        stack.push_back({*v, 0, trail_.size()});
      }
      if (out.stats.nodes >= budget.max_nodes ||
          ((out.stats.nodes & 0x3FF) == 0 && out.stats.nodes != 0 && Clock::now() - start > budget.max_seconds)) {
        return finish(VerdictKind::Unknown);
      }
      ++out.stats.nodes;
      Frame& f = stack.back();
      if (propagate(f.v, f.color)) {
        descend = true;
        continue;
      }
      // The root decision only tries Red: the color swap of any proper coloring is proper.
      while (!stack.empty()) {
        Frame& top = stack.back();
        undo(top.mark);
        if (top.color == 0 && stack.size() > 1) {
          top.color = 1;
          break;
        }
        stack.pop_back();
      }
      if (stack.empty()) return finish(VerdictKind::NonColorable);
      descend = false;
    }
  }

 private:
  static constexpr std::uint8_t kUnassigned = 2;

  // Branch inside the one-colored edge with the fewest free vertices; fall back to the static order.
  std::optional<VertexId> next_unassigned() const {
    std::size_t best_free = n_ + 1;
    std::size_t best_edge = 0;
    for (std::size_t e = 0; e < count_.size(); ++e) {
      const auto& cnt = count_[e];
      if (cnt[0] != 0 && cnt[1] != 0) continue;
      const std::size_t assigned = cnt[0] + cnt[1];
      if (assigned == 0) continue;
      const std::size_t free = n_ - assigned;
      if (free < best_free) {
        best_free = free;
        best_edge = e;
        if (free == 1) break;
      }
    }
    if (best_free <= n_) {
      std::optional<VertexId> pick;
      for (VertexId w : h_.edge(best_edge))
        if (color_[w] == kUnassigned && (!pick || rank_[w] < rank_[*pick])) pick = w;
      return pick;
    }
    for (VertexId v : order_)
      if (color_[v] == kUnassigned) return v;
    return std::nullopt;
  }

  bool propagate(VertexId v, std::uint8_t c) {
    queue_.clear();
    queue_.push_back({v, c});
    bool ok = true;
    for (std::size_t qi = 0; qi < queue_.size() && ok; ++qi) {
      const auto [u, cu] = queue_[qi];
      if (color_[u] != kUnassigned) {
        if (color_[u] != cu) ok = false;
        continue;
      }
      color_[u] = cu;
      trail_.push_back(u);
      // All increments for u happen before any early exit so undo() stays symmetric.
      for (std::size_t i = incidence_start_[u]; i < incidence_start_[u + 1]; ++i) {
        const std::uint32_t e = incidence_[i];
        auto& cnt = count_[e];
        const std::size_t same = ++cnt[cu];
        if (same == n_) {
          ok = false;
        } else if (same == n_ - 1 && cnt[1 - cu] == 0) {
          for (VertexId w : h_.edge(e)) {
            if (color_[w] == kUnassigned) {
              queue_.push_back({w, static_cast<std::uint8_t>(1 - cu)});
              break;
            }
          }
        }
      }
    }
    return ok;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const VertexId u = trail_.back();
      trail_.pop_back();
      const std::uint8_t cu = color_[u];
      for (std::size_t i = incidence_start_[u]; i < incidence_start_[u + 1]; ++i) --count_[incidence_[i]][cu];
      color_[u] = kUnassigned;
    }
  }

  const Hypergraph& h_;
  std::size_t n_;
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::size_t> incidence_start_;
  std::vector<std::uint32_t> incidence_;
  std::vector<std::array<std::uint32_t, 2>> count_;
  std::vector<std::uint8_t> color_;
  std::vector<VertexId> trail_;
  std::vector<std::pair<VertexId, std::uint8_t>> queue_;
};

}  // namespace detail

/**
 * Decides whether `h` has a proper 2-coloring.
 *
 * Auto picks the exhaustive engine when |V| <= budget.exhaustive_vertex_cap
 * and backtracking otherwise. Results are deterministic for a fixed budget.
 */
inline ColorabilityVerdict decide(const Hypergraph& h, const SolveBudget& budget = {}, Engine engine = Engine::Auto) {
  if (engine == Engine::Auto) {
    engine = h.num_vertices() <= budget.exhaustive_vertex_cap && h.num_vertices() <= 63 ? Engine::Exhaustive
                                                                                        : Engine::Backtracking;
  }
  if (engine == Engine::Exhaustive) return detail::ExhaustiveSearch(h).run(budget);
  return detail::BacktrackingSearch(h).run(budget);
}

}  // namespace propb
