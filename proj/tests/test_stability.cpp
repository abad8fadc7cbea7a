#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tlab/corpus.hpp"
#include "tlab/generators.hpp"
#include "tlab/stability.hpp"

using namespace tlab;
using oracle::q;

namespace {

// Vertices of I adjacent to everything outside I, counted pair by pair.
int literal_complete_count(const Graph &g, std::uint64_t i) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!((i >> v) & 1U))
      continue;
    bool all = true;
    for (int w = 0; w < g.order(); ++w)
      if (!((i >> w) & 1U) && !g.adjacent(v, w))
        all = false;
    c += all ? 1 : 0;
  }
  return c;
}

} // namespace

TEST(EdgeThreshold, Examples) {
  EXPECT_EQ(edge_threshold(6, 2, q(1, 2)), q(15, 2));
  EXPECT_EQ(edge_threshold(5, 2, q(1, 2)), 5);
  EXPECT_EQ(edge_threshold(9, 3, 0), 27);
  EXPECT_EQ(corollary_threshold(6, 2), q(17, 2));
  EXPECT_EQ(corollary_threshold(5, 2), 6);
}

TEST(StabilityWitness, Examples) {
  const auto k33 = find_stability_witness(gen::turan(6, 2), q(1, 2));
  ASSERT_TRUE(k33);
  EXPECT_EQ(k33->i, (VertexSet{0, 1, 2}));
  EXPECT_EQ(k33->complete_count, 3);
  EXPECT_EQ(k33->threshold, q(5, 4));
  EXPECT_FALSE(find_stability_witness(gen::cycle(5), q(1, 2)));
  const auto bmm = find_stability_witness(gen::bipartite_minus_matching(8, 2), q(1, 2));
  ASSERT_TRUE(bmm);
  EXPECT_EQ(bmm->i.size(), 4);
  EXPECT_EQ(bmm->complete_count, 2);
  EXPECT_EQ(bmm->threshold, q(7, 4));
}

TEST(StabilityWitness, ExtremalFamilyStructure) {
  for (int n : {8, 12}) {
    const Graph g = gen::bipartite_minus_matching(n, n / 4);
    std::vector<VertexSet> positive;
    enumerate_independent_sets(g, [&](VertexSet s) {
      if (complete_count(g, s) > 0)
        positive.push_back(s);
    });
    ASSERT_EQ(positive.size(), 2U);
    for (VertexSet s : positive) {
      EXPECT_EQ(s.size(), n / 2);
      EXPECT_EQ(Rational(complete_count(g, s)), (1 - q(1, 2)) * s.size());
    }
    EXPECT_TRUE((positive[0] & positive[1]).empty());
  }
}

TEST(StabilityWitness, MaximalMarginAgainstSubsetScan) {
  for (int n = 1; n <= 5; ++n)
    enumerate_labeled_graphs(n, [&](const Graph &g) {
      for (const Rational &sigma : {Rational(0), q(1, 4), q(1, 2)}) {
        std::optional<Rational> best;
        std::uint64_t arg = 0;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
          if (!oracle::subset_independent(g, m))
            continue;
          const int cc = literal_complete_count(g, m);
          const Rational margin = cc - (1 - sigma) * (oracle::popcount(m) - sigma);
          if (margin <= 0)
            continue;
          if (!best || margin > *best || (margin == *best && lex_less(VertexSet(m), VertexSet(arg)))) {
            best = margin;
            arg = m;
          }
        }
        const auto w = find_stability_witness(g, sigma);
        ASSERT_EQ(w.has_value(), best.has_value());
        if (w) {
          ASSERT_EQ(w->i.bits(), arg);
          ASSERT_EQ(w->margin(), *best);
          ASSERT_EQ(w->complete_count, literal_complete_count(g, arg));
        }
      }
    });
}

TEST(VerifyStability, Examples) {
  const auto k33 = verify_stability_theorem(gen::turan(6, 2), 2, q(1, 2));
  EXPECT_EQ(k33.verdict, Verdict::ok);
  EXPECT_EQ(k33.payload["witness"]["complete_count"], 3);
  EXPECT_EQ(verify_stability_theorem(gen::cycle(5), 2, q(1, 2)).verdict, Verdict::hypothesis_fail);
  EXPECT_EQ(verify_stability_theorem(gen::turan(9, 3), 3, q(1, 2)).verdict, Verdict::ok);
  EXPECT_EQ(verify_stability_theorem(gen::complete(4), 2, q(1, 2)).verdict, Verdict::hypothesis_fail);
  EXPECT_THROW(verify_stability_theorem(gen::cycle(5), 2, q(3, 4)), InvalidInput);
}

TEST(VerifyStability, NeverCounterexampleUpToSix) {
  for (int n = 1; n <= 6; ++n)
    enumerate_labeled_graphs(n, [&](const Graph &g) {
      for (int r : {2, 3, 4})
        for (const Rational &sigma : {Rational(0), q(1, 4), q(1, 2)}) {
          const auto rec = verify_stability_theorem(g, r, sigma);
          ASSERT_NE(rec.verdict, Verdict::counterexample) << rec.to_line();
          // sigma = 0 gate: nothing above the Turan number is K_{r+1}-free.
          if (sigma == 0) {
            ASSERT_EQ(rec.verdict, Verdict::hypothesis_fail) << rec.to_line();
          }
        }
    });
}

TEST(PeelColoring, Examples) {
  const auto c4 = peel_coloring(gen::cycle(4), 2);
  ASSERT_TRUE(c4);
  EXPECT_EQ(*c4, (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_FALSE(peel_coloring(gen::cycle(5), 3));
  const auto k33 = peel_coloring(gen::turan(6, 2), 2);
  ASSERT_TRUE(k33);
  EXPECT_EQ(*k33, (std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(peel_coloring(gen::turan(9, 3), 2));
}

TEST(PeelColoring, ClassesPartitionIntoIndependentSets) {
  for (int n = 1; n <= 6; ++n)
    enumerate_labeled_graphs(n, [&](const Graph &g) {
      for (int r : {2, 3}) {
        const auto classes = peel_coloring(g, r);
        if (!classes)
          continue;
        ASSERT_LE(static_cast<int>(classes->size()), r);
        VertexSet seen;
        for (VertexSet c : *classes) {
          ASSERT_FALSE(c.empty());
          ASSERT_TRUE(is_independent(g, c));
          ASSERT_TRUE((seen & c).empty());
          seen |= c;
        }
        ASSERT_EQ(seen, g.vertices());
      }
    });
}

TEST(VerifyCorollary, Examples) {
  EXPECT_EQ(verify_corollary(gen::turan(6, 2), 2).verdict, Verdict::ok);
  EXPECT_EQ(verify_corollary(gen::cycle(5), 2).verdict, Verdict::hypothesis_fail);
  const auto t = verify_corollary(gen::turan(9, 3), 3);
  EXPECT_EQ(t.verdict, Verdict::ok);
  EXPECT_EQ(t.payload["classes"].size(), 3U);
  EXPECT_EQ(t.payload["chi"], 3);
}
