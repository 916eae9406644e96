#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "propb/hypergraph.hpp"

namespace propb {

enum class SeedName { K1, Triangle, Fano };

inline Hypergraph seed(SeedName name) {
  switch (name) {
    case SeedName::K1: {
      EdgeSetBuilder b(1, 1);
      b.add({0});
      return std::move(b).build();
    }
    case SeedName::Triangle: {
      EdgeSetBuilder b(2, 3);
      b.add({0, 1});
      b.add({0, 2});
      b.add({1, 2});
      return std::move(b).build();
    }
    case SeedName::Fano: {
      // Difference set {0, 1, 3} mod 7.
      EdgeSetBuilder b(3, 7);
      for (VertexId i = 0; i < 7; ++i) b.add({i, (i + 1) % 7, (i + 3) % 7});
      return std::move(b).build();
    }
  }
  throw std::invalid_argument("unknown seed");
}

inline Hypergraph seed(std::string_view name) {
  if (name == "k1") return seed(SeedName::K1);
  if (name == "triangle") return seed(SeedName::Triangle);
  if (name == "fano") return seed(SeedName::Fano);
  throw std::invalid_argument("unknown seed '" + std::string(name) + "'");
}

/// All n-subsets of {0, ..., v-1}.
inline Hypergraph complete_hypergraph(std::size_t v, std::size_t n) {
  if (n == 0 || n > v) {
    throw std::invalid_argument("complete_hypergraph: need 1 <= n <= v, got n=" + std::to_string(n) +
                                " v=" + std::to_string(v));
  }
  EdgeSetBuilder b(n, v);
  std::vector<VertexId> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<VertexId>(i);
  while (true) {
    b.add(idx);
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == v - n + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::move(b).build();
}

}  // namespace propb
