#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>

#include "propb/cnf.hpp"
#include "propb/constructions.hpp"
#include "propb/lowerbounds.hpp"
#include "propb/seeds.hpp"
#include "propb/solver.hpp"
#include "property_suites.hpp"

using namespace propb;
using propb::testing::random_hypergraph;

TEST(Property, CanonicalizeIsIdempotent) {
  const auto r = propb::testing::canonicalize_idempotence();
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Property, CnfRoundTrip) {
  const auto r = propb::testing::cnf_round_trip();
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Property, VerdictInvariantUnderRelabeling) {
  const auto r = propb::testing::relabeling_invariance();
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_EQ(r.cases, 1200u);
  EXPECT_GT(r.colorable, 100u);
  EXPECT_GT(r.non_colorable, 100u);
}

TEST(Property, EnginesAgree) {
  const auto r = propb::testing::engine_agreement();
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_GT(r.colorable, 0u);
  EXPECT_GT(r.non_colorable, 0u);
}

TEST(Property, SchonheimMonotoneInVertices) {
  for (std::int64_t n = 2; n <= 7; ++n) {
    for (std::int64_t t = 1; t <= std::min<std::int64_t>(n, 3); ++t) {
      BigInt prev = 0;
      for (std::int64_t l = n; l <= 200; ++l) {
        const BigInt s = schonheim(l, n, t, 1);
        EXPECT_GE(s, prev) << "n=" << n << " t=" << t << " l=" << l;
        prev = s;
      }
    }
  }
}

TEST(Property, BlockedBoundNonIncreasing) {
  for (std::int64_t n = 3; n <= 9; ++n) {
    BigInt prev = blocked_bound(2 * n + 1, n);
    for (std::int64_t v = 2 * n + 2; v <= 6 * n; ++v) {
      const BigInt f = blocked_bound(v, n);
      EXPECT_LE(f, prev) << "n=" << n << " v=" << v;
      prev = f;
    }
  }
}

TEST(Property, PairCapBoundsSingleIntersections) {
  std::mt19937 rng(15);
  int premise_held = 0;
  for (int round = 0; round < 400; ++round) {
    const std::size_t v = 7 + rng() % 6;
    const Hypergraph h = random_hypergraph(rng, v, 5, 4 + rng() % 10);
    const auto deg = h.degrees();
    if (std::find(deg.begin(), deg.end(), 0u) != deg.end()) continue;

    std::size_t singles = 0;
    std::vector<bool> in_double(v, false);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      for (std::size_t j = i + 1; j < h.num_edges(); ++j) {
        std::vector<VertexId> common;
        std::set_intersection(h.edge(i).begin(), h.edge(i).end(), h.edge(j).begin(), h.edge(j).end(),
                              std::back_inserter(common));
        if (common.size() == 1) ++singles;
        if (common.size() >= 2)
          for (VertexId x : common) in_double[x] = true;
      }
    }
    if (!std::all_of(in_double.begin(), in_double.end(), [](bool b) { return b; })) continue;
    ++premise_held;
    std::vector<std::int64_t> d(deg.begin(), deg.end());
    EXPECT_LE(BigInt(singles), pair_intersection_cap(d));
  }
  EXPECT_GT(premise_held, 50);
}
