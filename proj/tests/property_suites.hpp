#pragma once

// Randomized suites shared by the unit tests and the acceptance runner.
// A suite stops at its first failure and reports it.

#include <algorithm>
#include <random>
#include <string>

#include "propb/cnf.hpp"
#include "propb/constructions.hpp"
#include "propb/hg_io.hpp"
#include "propb/seeds.hpp"
#include "propb/solver.hpp"
#include "test_util.hpp"

namespace propb::testing {

struct SuiteResult {
  std::string failure;
  std::size_t cases = 0;
  std::size_t colorable = 0;
  std::size_t non_colorable = 0;
  bool ok() const { return failure.empty(); }
};

inline SuiteResult canonicalize_idempotence(unsigned seed = 11, int rounds = 300) {
  std::mt19937 rng(seed);
  SuiteResult r;
  for (int round = 0; round < rounds && r.ok(); ++round) {
    const std::size_t v = 3 + rng() % 10, n = 1 + rng() % 3;
    EdgeList raw{n, v, {}};
    const std::size_t m = rng() % 30;
    std::vector<VertexId> all = random_permutation(rng, v);
    for (std::size_t i = 0; i < m; ++i) {
      std::shuffle(all.begin(), all.end(), rng);
      raw.edges.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
      if (rng() % 4 == 0) raw.edges.push_back(raw.edges.back());
    }
    const Hypergraph once = canonicalize(raw);
    std::shuffle(raw.edges.begin(), raw.edges.end(), rng);
    if (!(canonicalize(once) == once) || !(canonicalize(to_edge_list(once)) == once) || !(canonicalize(raw) == once)) {
      r.failure = "canonicalize not idempotent on round " + std::to_string(round);
    }
    ++r.cases;
  }
  return r;
}

inline SuiteResult cnf_round_trip(unsigned seed = 12, int rounds = 200) {
  std::mt19937 rng(seed);
  SuiteResult r;
  for (int round = 0; round < rounds && r.ok(); ++round) {
    const std::size_t v = 4 + rng() % 10, n = 2 + rng() % 3;
    const Hypergraph h = random_hypergraph(rng, v, n, 1 + rng() % 25);
    const DimacsCnf cnf = parse_dimacs(export_nae_cnf(h));
    ++r.cases;
    if (cnf.num_vars != v || cnf.clauses.size() != 2 * h.num_edges()) {
      r.failure = "header mismatch on round " + std::to_string(round);
      break;
    }
    for (std::size_t e = 0; e < h.num_edges() && r.ok(); ++e) {
      const auto& pos = cnf.clauses[2 * e];
      const auto& neg = cnf.clauses[2 * e + 1];
      bool same = pos.size() == n && neg.size() == n;
      for (std::size_t i = 0; same && i < n; ++i) {
        same = pos[i] == static_cast<long>(h.edge(e)[i]) + 1 && neg[i] == -pos[i];
      }
      if (!same) r.failure = "clause pair " + std::to_string(e) + " does not encode its edge";
    }
    for (int k = 0; k < 20 && r.ok(); ++k) {
      Coloring c(v);
      for (auto& x : c) x = rng() % 2 ? Color::Blue : Color::Red;
      if (satisfies(cnf, to_assignment(c)) == has_monochromatic_edge(h, c).has_value()) {
        r.failure = "CNF satisfaction disagrees with the coloring check on round " + std::to_string(round);
      }
    }
  }
  return r;
}

/// Random hypergraphs on at most 14 vertices; verdicts must survive a random relabeling.
inline SuiteResult relabeling_invariance(unsigned seed = 13, int rounds = 1200) {
  std::mt19937 rng(seed);
  SuiteResult r;
  for (int round = 0; round < rounds && r.ok(); ++round) {
    const std::size_t v = 3 + rng() % 12;
    const std::size_t n = 2 + rng() % std::min<std::size_t>(3, v - 1);
    const Hypergraph h = random_hypergraph(rng, v, n, 1 + rng() % (4 * v));
    const Hypergraph g = h.relabeled(random_permutation(rng, v));
    const ColorabilityVerdict a = decide(h), b = decide(g);
    ++r.cases;
    if (a.kind != b.kind || a.kind == VerdictKind::Unknown) {
      r.failure = "verdict changed under relabeling:\n" + to_hg_string(h);
    } else if (a.kind == VerdictKind::Colorable) {
      ++r.colorable;
      if (!verify_witness(h, *a.witness) || !verify_witness(g, *b.witness)) r.failure = "bad witness";
    } else {
      ++r.non_colorable;
    }
  }
  return r;
}

/// Constructed instances, their one-edge deletions and random hypergraphs, all on at most 18 vertices.
inline SuiteResult engine_agreement(unsigned seed_value = 14, int rounds = 400) {
  std::vector<Hypergraph> corpus;
  const Hypergraph fano = seed(SeedName::Fano), tri = seed(SeedName::Triangle);
  for (const Hypergraph& h : {fano, abbott_hanson_toft(tri), abbott_hanson_toft(fano), complete_hypergraph(7, 4),
                              mathews_second(tri), mathews_third(tri), generalized_aht(seed(SeedName::K1), 2)}) {
    corpus.push_back(h);
    for (std::size_t i = 0; i < h.num_edges(); i += 3) corpus.push_back(h.without_edge(i));
  }
  std::mt19937 rng(seed_value);
  for (int round = 0; round < rounds; ++round) {
    const std::size_t v = 4 + rng() % 15;
    const std::size_t n = 2 + rng() % 4;
    if (n > v) continue;
    corpus.push_back(random_hypergraph(rng, v, n, 1 + rng() % (6 * v)));
  }
  SuiteResult r;
  for (const Hypergraph& h : corpus) {
    ++r.cases;
    if (h.num_vertices() > 18) {
      r.failure = "corpus instance exceeds 18 vertices";
      break;
    }
    const ColorabilityVerdict a = decide(h, {}, Engine::Exhaustive);
    const ColorabilityVerdict b = decide(h, {}, Engine::Backtracking);
    if (a.kind != b.kind || a.kind == VerdictKind::Unknown) {
      r.failure = "engines disagree on:\n" + to_hg_string(h);
      break;
    }
    if (b.kind == VerdictKind::Colorable) {
      ++r.colorable;
      if (!verify_witness(h, *b.witness) || !verify_witness(h, *a.witness)) {
        r.failure = "bad witness on:\n" + to_hg_string(h);
        break;
      }
    } else {
      ++r.non_colorable;
    }
  }
  return r;
}

}  // namespace propb::testing
