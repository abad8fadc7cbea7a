#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tlab/corpus.hpp"
#include "tlab/generators.hpp"
#include "tlab/proof_structure.hpp"

using namespace tlab;
using oracle::q;

TEST(BaseCliques, Examples) {
  const auto c5 = base_cliques(gen::cycle(5));
  ASSERT_EQ(c5.size(), 5U);
  EXPECT_EQ(c5.front(), (VertexSet{0, 1}));
  const auto k4 = base_cliques(gen::complete(4));
  ASSERT_EQ(k4.size(), 1U);
  EXPECT_EQ(k4[0], (VertexSet{0, 1, 2, 3}));
  // Two triangles bridged at 0-3: the degree-2 vertices are 1, 2, 4, 5.
  EXPECT_EQ(base_cliques(gen::clique_chain({3, 3})), (std::vector<VertexSet>{{1, 2}, {4, 5}}));
}

TEST(BaseCliques, BlowupOfFiveCycle) {
  // c5_blowup(2): 0 is the apex, {1,2} and {5,6} the blobs, 3-4 the far edge.
  // Every vertex but the apex has degree 3.
  const Graph g = gen::c5_blowup(2);
  EXPECT_EQ(base_cliques(g), (std::vector<VertexSet>{{1, 2, 3}, {4, 5, 6}}));
  EXPECT_FALSE(is_base_clique(g, VertexSet{3, 4}));
}

TEST(BaseCliqueContext, FiveCycle) {
  const auto c = base_clique_context(gen::cycle(5), VertexSet{0, 1});
  EXPECT_TRUE(c.a.empty());
  EXPECT_EQ(c.u, (VertexSet{2, 4}));
  EXPECT_EQ(c.ell, 1);
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.delta, 2);
  EXPECT_THROW(base_clique_context(gen::cycle(5), VertexSet{0, 2}), InvalidInput);
}

TEST(BaseCliqueContext, CompleteGraph) {
  const auto c = base_clique_context(gen::complete(5), VertexSet{0, 1, 2, 3, 4});
  EXPECT_TRUE(c.a.empty());
  EXPECT_TRUE(c.u.empty());
  EXPECT_EQ(c.ell, 0);
  EXPECT_EQ(c.d, 0);
}

TEST(BaseCliqueContext, BlowupAndChain) {
  const Graph g = gen::c5_blowup(2);
  const auto c = base_clique_context(g, VertexSet{1, 2, 3});
  EXPECT_TRUE(c.a.empty());
  EXPECT_EQ(c.u, (VertexSet{0, 4}));
  EXPECT_EQ(c.ell, 1);
  EXPECT_EQ(c.d, 2);
  EXPECT_EQ(c.ell, c.delta + 1 - (c.k | c.a).size());

  const auto chain = base_clique_context(gen::clique_chain({3, 3}), VertexSet{1, 2});
  EXPECT_EQ(chain.a, VertexSet{0});
  EXPECT_TRUE(chain.u.empty());
  EXPECT_EQ(chain.ell, 0);
}

TEST(BaseCliqueContext, InvariantsOnExhaustiveCorpus) {
  for (int n = 2; n <= 6; ++n)
    enumerate_labeled_graphs(n, [&](const Graph &g) {
      if (min_degree(g) == 0)
        return;
      for (VertexSet k : base_cliques(g)) {
        const auto c = base_clique_context(g, k);
        ASSERT_TRUE(is_clique(g, k));
        ASSERT_TRUE((c.k & c.a).empty());
        ASSERT_TRUE((c.u & (c.k | c.a)).empty());
        ASSERT_EQ(c.ell, c.delta + 1 - (c.k | c.a).size());
        int attachments = 0;
        for (int u : c.u) {
          const int x = (g.row(u) & k).size();
          ASSERT_GE(x, 1);
          ASSERT_LT(x, k.size());
          ASSERT_LE(x, c.d);
          attachments += x;
        }
        ASSERT_EQ(attachments, c.ell * k.size());
        for (int v : k)
          ASSERT_EQ((g.row(v) & c.u).size(), c.ell);
        if (!c.u.empty()) {
          ASSERT_GE(c.d, 1);
        }
      }
    });
}

TEST(FKWeights, FiveCyclePath) {
  const auto fk = f_K_weights(gen::cycle(5), VertexSet{0, 1});
  ASSERT_EQ(fk.rest.graph.order(), 3);
  EXPECT_EQ(fk.rest.to_original, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(fk.weights, WeightFn(std::vector<Rational>{q(1, 2), q(2, 5), q(1, 2)}));
}

TEST(FKWeights, EmptyRemainder) {
  const auto fk = f_K_weights(gen::complete(4), VertexSet{0, 1, 2, 3});
  EXPECT_EQ(fk.rest.graph.order(), 0);
  EXPECT_EQ(fk.weights.size(), 0);
  EXPECT_THROW(f_K_weights(gen::complete(4), VertexSet{0, 1, 2}), InvalidInput);
}

TEST(FKWeights, CliqueSumsAtMostOneOnExhaustiveCorpus) {
  for (int n = 2; n <= 6; ++n)
    enumerate_labeled_graphs(n, [&](const Graph &g) {
      if (min_degree(g) == 0)
        return;
      for (VertexSet k : base_cliques(g)) {
        const auto fk = f_K_weights(g, k);
        const Graph &h = fk.rest.graph;
        for (int v = 0; v < h.order(); ++v)
          ASSERT_LE(fk.weights[v], Rational(2, 2 * h.degree(v) + 1));
        if (h.order() > 0) {
          ASSERT_LE(max_weight_clique(h, fk.weights).weight, 1);
        }
      }
    });
}

TEST(SingleLostColor, FiveCycle) {
  const auto s = eval_single_lost_color(gen::cycle(5), VertexSet{0, 1}, 0,
                                        WeightFn::constant(5, q(2, 5)));
  EXPECT_EQ(s.lhs, q(1, 5));
  EXPECT_EQ(s.rhs, q(3, 10));
  const auto other = eval_single_lost_color(gen::cycle(5), VertexSet{0, 1}, 1,
                                            WeightFn::constant(5, q(2, 5)));
  EXPECT_EQ(other.lhs, s.lhs);
  EXPECT_EQ(other.rhs, s.rhs);
  EXPECT_THROW(eval_single_lost_color(gen::cycle(5), VertexSet{0, 1}, 2), InvalidInput);
  EXPECT_THROW(eval_single_lost_color(gen::cycle(5), VertexSet{0, 1}, 0, WeightFn::constant(5, q(1, 2))),
               InvalidInput);
}

TEST(SingleLostColor, StandaloneClique) {
  for (int n = 2; n <= 6; ++n) {
    VertexSet all;
    for (int v = 0; v < n; ++v)
      all.insert(v);
    const Rational d = n - 1;
    EXPECT_THROW(eval_single_lost_color(gen::complete(n), all, 0), InvalidInput);
    const auto s = eval_single_lost_color(gen::complete(n), all, 0, WeightFn::constant(n, q(1, n)));
    EXPECT_EQ(s.lhs, Rational(1, 2) / (d + q(3, 2)) - Rational(n) / ((d + q(3, 2)) * (d + q(1, 2))));
    EXPECT_EQ(s.rhs, 0);
  }
}

TEST(Averaging, Examples) {
  const auto c5 = eval_averaging_inequality(gen::cycle(5), VertexSet{0, 1});
  EXPECT_EQ(c5.lhs, q(7, 10));
  EXPECT_EQ(c5.rhs, q(5, 6));
  const auto k5 = eval_averaging_inequality(gen::complete(5), VertexSet{0, 1, 2, 3, 4});
  EXPECT_EQ(k5.rhs, 0);
  const auto chain = eval_averaging_inequality(gen::clique_chain({3, 3}), VertexSet{1, 2});
  EXPECT_EQ(chain.lhs, q(-3, 10));
  EXPECT_EQ(chain.rhs, 0);
  // Apex with two K-neighbours weighs 1/2, the far vertex with one weighs 1/4.
  const auto blow = eval_averaging_inequality(gen::c5_blowup(2), VertexSet{1, 2, 3});
  EXPECT_EQ(blow.lhs, q(9, 14));
  EXPECT_EQ(blow.rhs, q(3, 4));
}

TEST(Explorer, JsonShape) {
  const Json j = explore_base_clique(gen::cycle(5), VertexSet{0, 1});
  EXPECT_EQ(j["ell"], 1);
  EXPECT_EQ(j["f_K"]["3"], "2/5");
  ASSERT_EQ(j["single_lost_color"].size(), 2U);
  EXPECT_EQ(j["single_lost_color"][0]["lhs"], "1/5");
  EXPECT_EQ(j["averaging"]["rhs"], "5/6");
  EXPECT_EQ(j["f_source"], "degree_caps");
  // Caps on K_4 sum to 8/7 over the clique, so the LP optimum stands in.
  const Json k4 = explore_base_clique(gen::complete(4), VertexSet{0, 1, 2, 3});
  EXPECT_EQ(k4["f_source"], "lp_optimum");
  EXPECT_EQ(k4["single_lost_color"].size(), 4U);
}
