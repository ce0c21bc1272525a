#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "ooc/clique.hpp"
#include "ooc/code_model.hpp"
#include "ooc/correlation.hpp"
#include "support/oracles.hpp"

namespace ooc {
namespace {

using Adjacency = std::vector<std::vector<char>>;

CodeGraph graph_from(const Adjacency& adj) {
  CodeGraph g(adj.size(), 1);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = i + 1; j < adj.size(); ++j) {
      if (adj[i][j]) g.connect(i, j);
    }
  }
  return g;
}

Adjacency complete(std::size_t n) {
  Adjacency a(n, std::vector<char>(n, 1));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 0;
  return a;
}

Adjacency oracle_adjacency(const std::vector<oracle::Positions>& codes, int n, int lambda) {
  Adjacency a(codes.size(), std::vector<char>(codes.size(), 0));
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      a[i][j] = a[j][i] = oracle::cross_overlap_max(codes[i], codes[j], n) <= lambda;
    }
  }
  return a;
}

oracle::Positions positions_of(const Dopr& d) {
  const auto w = wpr_from_dopr(d);
  return {w.positions().begin(), w.positions().end()};
}

std::vector<Dopr> as_doprs(const std::vector<oracle::Positions>& codes, int n) {
  std::vector<Dopr> out;
  for (const auto& p : codes) out.push_back(dopr_from_wpr(Wpr(p, n)));
  return out;
}

TEST(NodeSet, BitOperations) {
  NodeSet a(130);
  NodeSet b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(129);
  EXPECT_EQ(a.count(), 3U);
  EXPECT_EQ(a.count_and(b), 2U);
  a &= b;
  EXPECT_EQ(a.members(), (std::vector<std::size_t>{64, 129}));
  a.reset(64);
  a.reset(129);
  EXPECT_FALSE(a.any());
}

TEST(BuildGraph, SingleCodeHasNoEdges) {
  const std::vector<Dopr> one{Dopr({1, 3, 21}, 25)};
  const auto g = build_graph(one, 1);
  EXPECT_EQ(g.size(), 1U);
  EXPECT_EQ(g.degree(0), 0U);
}

TEST(BuildGraph, EdgesMatchBruteForceCrossCorrelation) {
  const auto classes = oracle::admissible_classes(25, 3, 1);
  const auto g = build_graph(as_doprs(classes, 25), 1);
  const auto adj = oracle_adjacency(classes, 25, 1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_FALSE(g.adjacent(i, i));
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i != j) ASSERT_EQ(g.adjacent(i, j), static_cast<bool>(adj[i][j])) << i << "," << j;
    }
  }
}

TEST(BuildGraph, MutuallyCompatibleTripleIsTriangle) {
  const std::vector<Dopr> codes{Dopr({1, 3, 21}, 25), Dopr({2, 6, 17}, 25), Dopr({5, 7, 13}, 25)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      ASSERT_EQ(oracle::cross_overlap_max(positions_of(codes[i]), positions_of(codes[j]), 25), 1);
    }
  }
  const auto g = build_graph(codes, 1);
  EXPECT_EQ(greedy_clique(g), (Clique{0, 1, 2}));
}

TEST(GreedyClique, CompleteGraph) {
  EXPECT_EQ(greedy_clique(graph_from(complete(3))), (Clique{0, 1, 2}));
}

TEST(GreedyClique, EdgelessGraphGivesLowestNode) {
  const Adjacency none(5, std::vector<char>(5, 0));
  EXPECT_EQ(greedy_clique(graph_from(none)), (Clique{0}));
}

TEST(GreedyClique, RandomGraphsAgainstExactOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Adjacency adj(10, std::vector<char>(10, 0));
    for (std::size_t i = 0; i < 10; ++i) {
      for (std::size_t j = i + 1; j < 10; ++j) adj[i][j] = adj[j][i] = (rng() & 1U) != 0;
    }
    const auto g = graph_from(adj);
    const auto c = greedy_clique(g);
    EXPECT_LE(c.size(), oracle::max_clique_size(adj));
    EXPECT_TRUE(oracle::is_maximal_clique(adj, c));
    EXPECT_TRUE(is_clique(g, c));
    EXPECT_TRUE(is_maximal(g, c));
    for (const auto& e : enumerate_cliques(g)) EXPECT_TRUE(oracle::is_maximal_clique(adj, e));
  }
}

TEST(EnumerateCliques, CompleteGraphConverges) {
  EXPECT_EQ(enumerate_cliques(graph_from(complete(3))), (std::vector<Clique>{{0, 1, 2}}));
}

TEST(EnumerateCliques, TwoDisjointTriangles) {
  Adjacency adj(6, std::vector<char>(6, 0));
  for (std::size_t base : {0U, 3U}) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) adj[base + i][base + j] = 1;
      }
    }
  }
  const auto cliques = enumerate_cliques(graph_from(adj));
  EXPECT_EQ(cliques, (std::vector<Clique>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(Maximality, TriangleInsideK4) {
  const auto g = graph_from(complete(4));
  EXPECT_FALSE(is_maximal(g, Clique{0, 1, 2}));
  EXPECT_TRUE(is_maximal(g, Clique{0, 1, 2, 3}));
}

TEST(Maximality, CodeSetAgainstCandidates) {
  const auto pool = as_doprs(oracle::admissible_classes(25, 3, 1), 25);
  const auto g = build_graph(pool, 1);
  const auto c = greedy_clique(g);
  std::vector<Dopr> members;
  for (auto i : c) members.push_back(pool[i]);
  const auto set = make_clique_set(members, CodeParams{25, 3, 1, 1});
  EXPECT_TRUE(verify_maximality(set, pool));
  EXPECT_EQ(set.bound, 4U);
  EXPECT_EQ(set.verified_lambda_a, 1);
  if (members.size() > 1) {
    const auto smaller = make_clique_set({members.begin(), members.end() - 1}, CodeParams{25, 3, 1, 1});
    EXPECT_FALSE(verify_maximality(smaller, pool));
  }
}

TEST(CliqueSets, InterSetValues) {
  const CodeParams p{13, 4, 1, 1};
  const auto a = make_clique_set({Dopr({1, 2, 6, 4}, 13)}, p);
  EXPECT_EQ(interset_crosscorr(a, a), 4);
  EXPECT_EQ(a.verified_lambda_c, 0);
}

TEST(SelectFamily, SingleClique) {
  const auto a = make_clique_set({Dopr({1, 2, 6, 4}, 13)}, CodeParams{13, 4, 1, 1});
  const std::vector<CliqueSet> sets{a};
  const auto f = select_family(sets, 1);
  ASSERT_EQ(f.sets.size(), 1U);
  EXPECT_EQ(f.interset_lambda, 0);
}

TEST(SelectFamily, PairAtThresholdIsKept) {
  const CodeParams p{13, 4, 1, 1};
  const auto a = make_clique_set({Dopr({2, 3, 4, 4}, 13)}, p);
  const auto b = make_clique_set({Dopr({1, 2, 6, 4}, 13)}, p);
  ASSERT_EQ(interset_crosscorr(a, b), 2);
  const std::vector<CliqueSet> sets{a, b};
  const auto m = clique_set_matrix(sets, 1);
  EXPECT_EQ(m.at(0, 1), 2);
  EXPECT_TRUE(m.normalized.adjacent(0, 1));
  const auto f = select_family(sets, 1);
  EXPECT_EQ(f.sets.size(), 2U);
  EXPECT_EQ(f.interset_lambda, 2);
}

// Relaxing the constraint never shrinks the largest set.
TEST(ExactOracle, MaximumCliqueGrowsWithConstraint) {
  for (int n = 7; n <= 19; ++n) {
    std::size_t previous = 0;
    for (int lambda = 1; lambda <= 2; ++lambda) {
      const auto classes = oracle::admissible_classes(n, 3, lambda);
      ASSERT_LE(classes.size(), 160U);
      const std::size_t best = oracle::max_clique_size(oracle_adjacency(classes, n, lambda));
      EXPECT_GE(best, previous) << "n=" << n << " lambda=" << lambda;
      EXPECT_LE(best, johnson_bound(n, 3, lambda));
      previous = best;
    }
  }
}

}  // namespace
}  // namespace ooc
