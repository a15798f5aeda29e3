#include "vecdom/graph.h"

#include <gtest/gtest.h>

#include <numeric>

#include "vecdom/error.h"
#include "vecdom/generators.h"

namespace vecdom {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no vecdom::Error thrown";
  return ErrorCode::kMalformed;
}

TEST(GraphTest, SingleEdge) {
  const std::vector<Edge> edges = {{0, 1}};
  const Graph g = Graph::Build(2, edges);
  EXPECT_EQ(g.n(), 2);
  EXPECT_EQ(g.m(), 1);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 1);
}

TEST(GraphTest, BuildErrors) {
  const std::vector<Edge> loop = {{0, 0}};
  EXPECT_EQ(CodeOf([&] { Graph::Build(3, loop); }), ErrorCode::kSelfLoop);
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  EXPECT_EQ(CodeOf([&] { Graph::Build(3, dup); }), ErrorCode::kDuplicateEdge);
  const std::vector<Edge> out = {{0, 3}};
  EXPECT_EQ(CodeOf([&] { Graph::Build(3, out); }), ErrorCode::kOutOfRange);
  const std::vector<Edge> neg = {{-1, 2}};
  EXPECT_EQ(CodeOf([&] { Graph::Build(3, neg); }), ErrorCode::kOutOfRange);
}

TEST(GraphTest, CycleDegrees) {
  const Graph g = CycleGraph(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_EQ(g.m(), 4);
  EXPECT_TRUE(g.HasEdge(3, 0));
  EXPECT_FALSE(g.HasEdge(0, 2));
}

TEST(GraphTest, AdjacencyIsSymmetricAndSorted) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = RandomGnp(12, 0.3, rng);
    int64_t degree_sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      const auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex u : nb) EXPECT_TRUE(g.HasEdge(u, v));
      degree_sum += g.degree(v);
    }
    EXPECT_EQ(degree_sum, 2 * g.m());
  }
}

TEST(GraphTest, ReverseBfsPath) {
  const Graph g = PathGraph(3);  // a=0, b=1, c=2
  const RootedTree t = ReverseBfsOrder(g, 0);
  EXPECT_EQ(t.order, (std::vector<Vertex>{2, 1, 0}));
  EXPECT_EQ(t.parent[2], 1);
  EXPECT_EQ(t.parent[1], 0);
  EXPECT_EQ(t.parent[0], -1);
}

TEST(GraphTest, ReverseBfsStar) {
  const Graph g = StarGraph(3);
  const RootedTree t = ReverseBfsOrder(g, 0);
  ASSERT_EQ(t.order.size(), 4u);
  EXPECT_EQ(t.order.back(), 0);
  std::vector<Vertex> leaves(t.order.begin(), t.order.begin() + 3);
  std::sort(leaves.begin(), leaves.end());
  EXPECT_EQ(leaves, (std::vector<Vertex>{1, 2, 3}));
}

TEST(GraphTest, ReverseBfsRejectsNonTrees) {
  EXPECT_EQ(CodeOf([] { ReverseBfsOrder(CompleteGraph(3), 0); }),
            ErrorCode::kNotATree);
  const std::vector<Edge> edges = {{0, 1}};
  const Graph forest = Graph::Build(4, edges);
  EXPECT_EQ(CodeOf([&] { ReverseBfsOrder(forest, 0); }), ErrorCode::kNotATree);
  EXPECT_EQ(CodeOf([] { ReverseBfsOrder(PathGraph(3), 5); }),
            ErrorCode::kOutOfRange);
}

TEST(GraphTest, ReverseBfsChildBeforeParent) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = RandomTree(40, rng);
    const Vertex root = static_cast<Vertex>(trial % 40);
    const RootedTree t = ReverseBfsOrder(g, root);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[t.order[i]] = i;
    EXPECT_EQ(t.order.back(), root);
    for (Vertex v = 0; v < g.n(); ++v) {
      if (v == root) continue;
      EXPECT_TRUE(g.HasEdge(v, t.parent[v]));
      EXPECT_LT(pos[v], pos[t.parent[v]]);
    }
  }
}

TEST(GraphTest, DisjointUnionCounts) {
  const std::vector<Graph> two_k2 = {CompleteGraph(2), CompleteGraph(2)};
  const auto u = DisjointUnion(two_k2);
  EXPECT_EQ(u.graph.n(), 4);
  EXPECT_EQ(u.graph.m(), 2);
  const std::vector<Vertex> all = {0, 1, 2, 3};
  EXPECT_EQ(ComponentsOf(u.graph, all).size(), 2u);

  EXPECT_EQ(DisjointUnion(std::vector<Graph>{}).graph.n(), 0);

  const std::vector<Graph> three_p3(3, PathGraph(3));
  const auto w = DisjointUnion(three_p3);
  EXPECT_EQ(w.graph.n(), 9);
  EXPECT_EQ(w.graph.m(), 6);
  for (Vertex v = 0; v < 9; ++v) {
    const auto [part, local] = w.origin[v];
    EXPECT_EQ(w.offsets[part] + local, v);
  }
}

TEST(GraphTest, JoinExamples) {
  EXPECT_EQ(Join(CompleteGraph(1), EmptyGraph(2)), StarGraph(2));
  const Graph c4 = Join(EmptyGraph(2), EmptyGraph(2));
  EXPECT_EQ(c4.m(), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2);
  EXPECT_EQ(Join(CompleteGraph(1), EmptyGraph(0)), CompleteGraph(1));
  const Graph j = Join(PathGraph(3), CycleGraph(4));
  EXPECT_EQ(j.m(), 2 + 4 + 3 * 4);
}

TEST(GraphTest, InducedSubgraphAndEdgeRemoval) {
  const Graph g = CycleGraph(5);
  const std::vector<Vertex> keep = {4, 0, 1};
  const Graph h = g.InducedSubgraph(keep);
  EXPECT_EQ(h, PathGraph(3));
  const Graph p = g.WithoutEdge(4, 0);
  EXPECT_EQ(p, PathGraph(5));
}

TEST(GraphTest, CoComponents) {
  const Graph c4 = CycleGraph(4);
  const std::vector<Vertex> all = {0, 1, 2, 3};
  const auto co = CoComponentsOf(c4, all);
  ASSERT_EQ(co.size(), 2u);
  EXPECT_EQ(co[0], (VertexSet{0, 2}));
  EXPECT_EQ(co[1], (VertexSet{1, 3}));
}

TEST(GraphTest, CompleteAndConnected) {
  EXPECT_TRUE(CompleteGraph(5).IsComplete());
  EXPECT_TRUE(EmptyGraph(1).IsComplete());
  EXPECT_FALSE(CycleGraph(4).IsComplete());
  EXPECT_TRUE(CycleGraph(4).IsConnected());
  EXPECT_FALSE(EmptyGraph(2).IsConnected());
}

TEST(GraphTest, PrueferTreesAreTrees) {
  const Graph t = TreeFromPruefer(6, {3, 3, 3, 4});
  EXPECT_EQ(t.m(), 5);
  EXPECT_TRUE(t.IsConnected());
  EXPECT_EQ(t.degree(3), 4);
}

}  // namespace
}  // namespace vecdom
