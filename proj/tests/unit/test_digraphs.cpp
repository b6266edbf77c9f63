#include "support.hpp"

#include "monoseq/digraphs.hpp"

#include <gtest/gtest.h>

using namespace monoseq;

namespace {

// Random DAG with Hamiltonian path along `order` plus chords pointing forward.
Digraph hamiltonian_dag(const PathPerm& order, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  const int n = order.size();
  for (int p = 0; p + 1 < n; ++p) edges.emplace_back(order.at(p), order.at(p + 1));
  std::uniform_int_distribution<int> pos(0, n - 1);
  for (int c = 0; c < n; ++c) {
    int a = pos(rng);
    int b = pos(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges.emplace_back(order.at(a), order.at(b));
  }
  return Digraph(n, edges);
}

}  // namespace

TEST(Digraph, Validation) {
  EXPECT_THROW(Digraph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Digraph(3, {{1, 4}}), std::invalid_argument);
  const Digraph g(3, {{1, 2}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.edges().size(), 2U);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(2, 1));
}

TEST(TopologicalOrder, PathGraph) {
  const auto t = topological_order(Digraph(3, {{1, 2}, {2, 3}}));
  ASSERT_TRUE(std::holds_alternative<TopOrder>(t));
  EXPECT_EQ(std::get<TopOrder>(t).order, (std::vector<int>{1, 2, 3}));
}

TEST(TopologicalOrder, TwoCycle) {
  const auto t = topological_order(Digraph(2, {{1, 2}, {2, 1}}));
  ASSERT_TRUE(std::holds_alternative<Cyclic>(t));
  EXPECT_EQ(std::get<Cyclic>(t).cycle.size(), 2U);
}

TEST(TopologicalOrder, CycleWitnessIsACycle) {
  const Digraph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 2}, {4, 5}, {6, 1}});
  const auto t = topological_order(g);
  ASSERT_TRUE(std::holds_alternative<Cyclic>(t));
  const auto& c = std::get<Cyclic>(t).cycle;
  ASSERT_GE(c.size(), 2U);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(g.has_edge(c[i], c[(i + 1) % c.size()]));
}

TEST(TopologicalOrder, BranchingDag) {
  const Digraph g(6, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 6}, {5, 6}, {1, 5}});
  const auto t = topological_order(g);
  ASSERT_TRUE(std::holds_alternative<TopOrder>(t));
  EXPECT_TRUE(is_topological(g, std::get<TopOrder>(t)));
  EXPECT_EQ(std::get<TopOrder>(t).order, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(is_order_unique(g, std::get<TopOrder>(t)));
}

TEST(IsOrderUnique, Examples) {
  const Digraph path(3, {{1, 2}, {2, 3}});
  EXPECT_TRUE(is_order_unique(path, TopOrder{{1, 2, 3}}));
  const Digraph sources(3, {{1, 3}, {2, 3}});
  EXPECT_FALSE(is_order_unique(sources, TopOrder{{1, 2, 3}}));
  const Digraph chords(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {1, 4}});
  EXPECT_TRUE(is_order_unique(chords, TopOrder{{1, 2, 3, 4}}));
  EXPECT_THROW((void)is_order_unique(path, TopOrder{{2, 1, 3}}), std::invalid_argument);
}

TEST(IsOrderUnique, HamiltonianAgreesWithReversedTieBreak) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const PathPerm order = test::random_path(8, rng);
    const Digraph g = hamiltonian_dag(order, rng);
    const auto a = topological_order(g, TieBreak::SmallestFirst);
    const auto b = topological_order(g, TieBreak::LargestFirst);
    ASSERT_TRUE(std::holds_alternative<TopOrder>(a));
    ASSERT_TRUE(std::holds_alternative<TopOrder>(b));
    EXPECT_EQ(std::get<TopOrder>(a).order, std::get<TopOrder>(b).order);
    EXPECT_EQ(std::get<TopOrder>(a).order, test::labels(order));
    EXPECT_TRUE(is_order_unique(g, std::get<TopOrder>(a)));
  }
}

TEST(ImpliedPath, Examples) {
  EXPECT_EQ(implied_path(TopOrder{{1, 2, 3}}), PathPerm({1, 2, 3}));
  EXPECT_EQ(implied_path(TopOrder{{2, 1, 3}}), PathPerm({2, 1, 3}));
  const Digraph path(4, {{3, 1}, {1, 4}, {4, 2}});
  EXPECT_EQ(implied_path(std::get<TopOrder>(topological_order(path))), PathPerm({3, 1, 4, 2}));
}

TEST(SolveDigraphs, PathGraphsMatchPathSolver) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 30; ++t) {
    std::vector<Digraph> gs;
    std::vector<TopOrder> ts;
    std::vector<PathPerm> paths;
    for (int i = 0; i < 3; ++i) {
      const PathPerm p = test::random_path(6, rng);
      std::vector<std::pair<int, int>> edges;
      for (int q = 0; q + 1 < 6; ++q) edges.emplace_back(p.at(q), p.at(q + 1));
      gs.emplace_back(6, edges);
      ts.push_back(TopOrder{test::labels(p)});
      paths.push_back(p);
    }
    const auto viaGraphs = solve_digraphs(gs, ts, FreeThree{});
    const auto viaPaths = solve_three_free(PathSet(paths));
    ASSERT_EQ(std::holds_alternative<DigraphEmbedding>(viaGraphs), is_embedding(viaPaths));
    if (const auto* de = std::get_if<DigraphEmbedding>(&viaGraphs)) {
      EXPECT_EQ(de->embedding.points, std::get<Embedding>(viaPaths).points);
      EXPECT_FALSE(de->caveat.empty());
    } else {
      EXPECT_EQ(std::get<NoEmbedding>(viaGraphs).reason, std::get<NoEmbedding>(viaPaths).reason);
    }
  }
}

TEST(SolveDigraphs, FixedDirections) {
  const std::vector<Digraph> gs{Digraph(3, {{1, 2}, {2, 3}}), Digraph(3, {{2, 1}, {1, 3}})};
  const std::vector<TopOrder> ts{TopOrder{{1, 2, 3}}, TopOrder{{2, 1, 3}}};
  const std::vector<Direction> dirs{Direction(Rat(1), Rat(0)), Direction(Rat(0), Rat(1))};
  const auto r = solve_digraphs(gs, ts, dirs);
  ASSERT_TRUE(std::holds_alternative<DigraphEmbedding>(r));
  const auto& e = std::get<DigraphEmbedding>(r).embedding;
  EXPECT_TRUE(verify(e.points, dirs, PathSet({PathPerm({1, 2, 3}), PathPerm({2, 1, 3})}), false).ok);
}

TEST(SolveDigraphs, Preconditions) {
  const std::vector<Digraph> gs{Digraph(3, {{1, 2}, {2, 3}})};
  EXPECT_THROW((void)solve_digraphs(gs, std::vector<TopOrder>{TopOrder{{2, 1, 3}}}, FreeThree{}),
               std::invalid_argument);
  EXPECT_THROW((void)solve_digraphs(gs, std::vector<TopOrder>{TopOrder{{1, 2, 3}}}, FreeThree{}),
               std::invalid_argument);  // k != 3
  EXPECT_THROW((void)solve_digraphs(gs, std::vector<TopOrder>{}, FreeThree{}), std::invalid_argument);
}
