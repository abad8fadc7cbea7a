#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tlab/cliques.hpp"
#include "tlab/generators.hpp"

using namespace tlab;
using oracle::q;

namespace {

std::vector<Graph> small_random_graphs(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i)
    out.push_back(oracle::random_graph(rng, 1 + static_cast<int>(rng() % max_n),
                                       0.2 + 0.6 * static_cast<double>(rng() % 100) / 100));
  return out;
}

} // namespace

TEST(MaximalCliques, FiveCycleEdges) {
  const auto cs = maximal_cliques(gen::cycle(5));
  ASSERT_EQ(cs.cliques.size(), 5U);
  for (VertexSet c : cs.cliques)
    EXPECT_EQ(c.size(), 2);
  EXPECT_EQ(cs.cliques.front(), (VertexSet{0, 1}));
  EXPECT_EQ(cs.source_n, 5);
}

TEST(MaximalCliques, CompleteGraph) {
  const auto cs = maximal_cliques(gen::complete(4));
  ASSERT_EQ(cs.cliques.size(), 1U);
  EXPECT_EQ(cs.cliques[0], (VertexSet{0, 1, 2, 3}));
}

TEST(MaximalCliques, Petersen) {
  const Graph p = gen::petersen();
  const auto cs = maximal_cliques(p);
  EXPECT_EQ(cs.cliques.size(), p.edge_count());
  EXPECT_EQ(oracle::omega(p), 2);
}

TEST(MaximalCliques, AgreeWithSubsetOracle) {
  for (const Graph &g : small_random_graphs(300, 10, 1)) {
    const auto cs = maximal_cliques(g);
    std::vector<std::uint64_t> got;
    for (VertexSet c : cs.cliques) {
      ASSERT_TRUE(is_clique(g, c));
      got.push_back(c.bits());
    }
    auto want = oracle::maximal_cliques(g);
    auto got_sorted = got;
    std::sort(got_sorted.begin(), got_sorted.end());
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got_sorted, want);
    ASSERT_TRUE(std::is_sorted(cs.cliques.begin(), cs.cliques.end(), lex_less));
  }
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(gen::turan(9, 3)), 3);
  EXPECT_EQ(clique_number(gen::cycle(5)), 2);
  // A blob of 4 plus the vertex adjacent to all of it and to the other end.
  EXPECT_EQ(clique_number(gen::c5_blowup(4)), oracle::omega(gen::c5_blowup(4)));
  EXPECT_EQ(clique_number(gen::c5_blowup(4)), 5);
}

TEST(CliqueNumber, MatchesLargestMaximalClique) {
  for (const Graph &g : small_random_graphs(300, 10, 2)) {
    int best = 0;
    for (VertexSet c : maximal_cliques(g).cliques)
      best = std::max(best, c.size());
    ASSERT_EQ(clique_number(g), best);
    ASSERT_EQ(clique_number(g), oracle::omega(g));
  }
}

TEST(MaxWeightClique, Examples) {
  const auto k4 = max_weight_clique(gen::complete(4), WeightFn::constant(4, q(2, 7)));
  EXPECT_EQ(k4.clique, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(k4.weight, q(8, 7));
  const auto c5 = max_weight_clique(gen::cycle(5), WeightFn::constant(5, q(2, 5)));
  EXPECT_EQ(c5.weight, q(4, 5));
  EXPECT_EQ(c5.clique, (VertexSet{0, 1}));
  const auto k33 = max_weight_clique(gen::turan(6, 2), WeightFn::constant(6, q(2, 7)));
  EXPECT_EQ(k33.weight, q(4, 7));
  EXPECT_EQ(k33.clique.size(), 2);
}

TEST(MaxWeightClique, DominatesEveryMaximalClique) {
  std::mt19937_64 rng(3);
  for (const Graph &g : small_random_graphs(300, 10, 4)) {
    std::vector<Rational> w;
    for (int v = 0; v < g.order(); ++v)
      w.emplace_back(static_cast<long long>(rng() % 7), 1 + static_cast<long long>(rng() % 5));
    const WeightFn f(w);
    const auto best = max_weight_clique(g, f);
    ASSERT_TRUE(is_clique(g, best.clique));
    ASSERT_EQ(f.sum(best.clique), best.weight);
    Rational top = 0;
    VertexSet arg;
    for (VertexSet c : maximal_cliques(g).cliques) {
      ASSERT_LE(f.sum(c), best.weight);
      top = std::max(top, f.sum(c));
    }
    ASSERT_EQ(top, best.weight);
    // Lexicographic tie-break against a literal subset scan.
    bool have = false;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      if (!oracle::subset_clique(g, m) || f.sum(VertexSet(m)) != top)
        continue;
      if (!have || lex_less(VertexSet(m), arg)) {
        arg = VertexSet(m);
        have = true;
      }
    }
    ASSERT_EQ(best.clique, arg);
  }
}

TEST(MaxWeightClique, NegativeWeightsIgnored) {
  const WeightFn f(std::vector<Rational>{q(-1), q(1, 2), q(1, 2)});
  const auto best = max_weight_clique(gen::complete(3), f);
  EXPECT_EQ(best.clique, (VertexSet{1, 2}));
  EXPECT_EQ(best.weight, 1);
}

TEST(Simplicial, Examples) {
  EXPECT_TRUE(simplicial_vertices(gen::cycle(5)).empty());
  EXPECT_EQ(simplicial_vertices(gen::complete(4)), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(simplicial_vertices(gen::path(3)), (VertexSet{0, 2}));
  EXPECT_EQ(simplicial_vertices(Graph(2)), (VertexSet{0, 1}));
}

TEST(Simplicial, ClosedNeighbourhoodInOneMaximalClique) {
  for (const Graph &g : small_random_graphs(300, 10, 5)) {
    const auto cs = maximal_cliques(g);
    for (int v : simplicial_vertices(g)) {
      const VertexSet closed = g.row(v) | VertexSet::single(v);
      int containing = 0;
      for (VertexSet c : cs.cliques)
        containing += closed.subset_of(c) ? 1 : 0;
      ASSERT_EQ(containing, 1);
    }
  }
}

TEST(SimplicialCondition, Examples) {
  EXPECT_TRUE(simplicial_clique_condition(gen::cycle(5), q(1, 2)).pass);
  const auto k4 = simplicial_clique_condition(gen::complete(4), q(1, 2));
  EXPECT_FALSE(k4.pass);
  EXPECT_EQ(*k4.witness, VertexSet{0});
  EXPECT_EQ(k4.witness_simplicial, 1);
  EXPECT_EQ(k4.witness_threshold, q(1, 4));
  EXPECT_TRUE(simplicial_clique_condition(gen::complete(4), 0).pass);
  EXPECT_THROW(simplicial_clique_condition(gen::cycle(5), q(3, 4)), InvalidInput);
  EXPECT_THROW(simplicial_clique_condition(gen::cycle(5), q(-1, 4)), InvalidInput);
}

TEST(SimplicialCondition, LiteralQuantifierOnExhaustiveCorpus) {
  // Every labeled graph on up to 6 vertices: evaluate the condition by
  // checking each non-empty clique directly and compare.
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      const VertexSet simp = simplicial_vertices(g);
      for (const Rational &sigma : {q(1, 4), q(1, 2)}) {
        bool literal = true;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n) && literal; ++m) {
          if (!oracle::subset_clique(g, m))
            continue;
          const VertexSet k(m);
          if ((k & simp).size() > (1 - sigma) * (k.size() - sigma))
            literal = false;
        }
        const auto cond = simplicial_clique_condition(g, sigma);
        ASSERT_EQ(cond.pass, literal);
        ASSERT_EQ(cond.pass, simp.empty());
        if (!cond.pass) {
          ASSERT_GT(cond.witness_simplicial, cond.witness_threshold);
        }
      }
    }
  }
}
