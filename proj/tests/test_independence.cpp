#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tlab/bounds.hpp"
#include "tlab/cliques.hpp"
#include "tlab/generators.hpp"
#include "tlab/independence.hpp"

using namespace tlab;

TEST(AlphaExact, Examples) {
  EXPECT_EQ(alpha_exact(gen::cycle(5)).alpha, 2);
  EXPECT_EQ(alpha_exact(gen::petersen()).alpha, oracle::alpha(gen::petersen()));
  EXPECT_EQ(alpha_exact(gen::petersen()).alpha, 4);
  EXPECT_EQ(alpha_exact(gen::turan(10, 3)).alpha, 4);
  EXPECT_EQ(alpha_exact(Graph(0)).alpha, 0);
  EXPECT_EQ(alpha_exact(Graph(5)).alpha, 5);
}

TEST(AlphaExact, WitnessIsLexSmallestMaximum) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 14, 0.35);
    const AlphaResult a = alpha_exact(g);
    ASSERT_EQ(a.alpha, oracle::alpha(g));
    ASSERT_EQ(a.witness.size(), a.alpha);
    ASSERT_TRUE(is_independent(g, a.witness));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
      if (oracle::popcount(m) == a.alpha && oracle::subset_independent(g, m)) {
        ASSERT_FALSE(lex_less(VertexSet(m), a.witness));
      }
  }
}

TEST(AlphaExact, ComplementCliqueIdentityAndCaroWei) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 9, 0.5);
    const int a = alpha_exact(g).alpha;
    ASSERT_EQ(a, clique_number(complement(g)));
    ASSERT_GE(Rational(a), caro_wei(g));
  }
}

TEST(AlphaExact, LargerGraphs) {
  EXPECT_EQ(alpha_exact(gen::c5_blowup(20)).alpha, 2);
  EXPECT_EQ(alpha_exact(gen::c7_blowup(15)).alpha, 3);
  EXPECT_EQ(alpha_exact(gen::cycle(51)).alpha, 25);
  EXPECT_EQ(alpha_exact(gen::turan(60, 7)).alpha, 9);
}

TEST(EnumerateIndependentSets, Counts) {
  EXPECT_EQ(independent_sets(gen::complete(3)).size(), 4U);
  EXPECT_EQ(independent_sets(Graph(3)).size(), 8U);
  EXPECT_EQ(independent_sets(gen::cycle(5)).size(), 11U);
}

TEST(EnumerateIndependentSets, BinaryCountingOrderAndOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 10, 0.4);
    std::vector<std::uint64_t> want;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
      if (oracle::subset_independent(g, m))
        want.push_back(m);
    std::vector<std::uint64_t> got;
    for (VertexSet s : independent_sets(g))
      got.push_back(s.bits());
    ASSERT_EQ(got, want);
  }
}

TEST(EnumerateIndependentSets, CapRefused) {
  EXPECT_THROW(independent_sets(Graph(21)), CapExceeded);
  EXPECT_NO_THROW(independent_sets(gen::complete(21), 21));
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chromatic_number_exact(gen::cycle(5)), 3);
  EXPECT_EQ(chromatic_number_exact(gen::turan(6, 2)), 2);
  EXPECT_EQ(chromatic_number_exact(gen::petersen()), 3);
  EXPECT_EQ(chromatic_number_exact(Graph(0)), 0);
  EXPECT_EQ(chromatic_number_exact(Graph(4)), 1);
  EXPECT_THROW(chromatic_number_exact(Graph(21)), CapExceeded);
}

TEST(ChromaticNumber, AgreesWithBruteForceAndBounds) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 8, 0.5);
    const int chi = chromatic_number_exact(g);
    ASSERT_EQ(chi, oracle::chromatic(g));
    ASSERT_GE(chi, clique_number(g));
    ASSERT_GE(Rational(chi), Rational(g.order(), alpha_exact(g).alpha));
  }
}
