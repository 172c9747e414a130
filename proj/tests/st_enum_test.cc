#include "spantree/st_enum.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/mst_baselines.hpp"
#include "spantree/stream.hpp"

namespace spantree {
namespace {

using EdgeKey = std::pair<VertexId, VertexId>;

EdgeKey key(const EdgeRef& e) { return {std::min(e.u, e.v), std::max(e.u, e.v)}; }

std::set<EdgeKey> key_set(const std::vector<EdgeRef>& edges) {
  std::set<EdgeKey> s;
  for (const auto& e : edges) s.insert(key(e));
  return s;
}

std::set<EdgeKey> forest_key_set(const ForestAdjacency& f) {
  std::set<EdgeKey> s;
  for (VertexId u = 0; u < f.neighbors.size(); ++u)
    for (VertexId v : f.neighbors[u]) s.insert({std::min(u, v), std::max(u, v)});
  return s;
}

std::set<EdgeKey> tree_key_set(const PredecessorTree& t) {
  std::set<EdgeKey> s;
  for (VertexId v = 0; v < t.parent.size(); ++v)
    if (t.parent[v] != kNoVertex && t.parent[v] != v)
      s.insert({std::min(v, t.parent[v]), std::max(v, t.parent[v])});
  return s;
}

bool forest_is_acyclic(const ForestAdjacency& f) {
  UnionFind uf(f.neighbors.size());
  for (VertexId u = 0; u < f.neighbors.size(); ++u)
    for (VertexId v : f.neighbors[u])
      if (u < v && !uf.unite(u, v)) return false;
  return true;
}

Graph path3() {
  Graph g(3, false, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

TEST(Phase1, PathSelectsTwoEdges) {
  Graph g = path3();
  CollectingSink sink;
  Phase1Result r = phase1_select_forest(g, sink);
  // origin 0 picks {0,1}; vertex 1 is already covered; origin 2 picks {2,1}
  EXPECT_EQ(r.forest.edge_count, 2u);
  ASSERT_EQ(r.forest.neighbors.size(), 3u);
  EXPECT_EQ(r.forest.neighbors[0], std::vector<VertexId>{1});
  EXPECT_EQ(r.forest.neighbors[1], (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(r.forest.neighbors[2], std::vector<VertexId>{1});
  ASSERT_EQ(sink.edges().size(), 2u);
  EXPECT_EQ(sink.edges()[0], EdgeRef::undirected(0, 1));
  EXPECT_EQ(sink.edges()[1], EdgeRef::undirected(1, 2));
  EXPECT_DOUBLE_EQ(r.degrees.average(), 4.0 / 3.0);
}

TEST(Phase1, SingleEdge) {
  Graph g(2, false, false);
  g.add_edge(0, 1);
  CountingSink sink;
  Phase1Result r = phase1_select_forest(g, sink);
  EXPECT_EQ(r.forest.edge_count, 1u);
  EXPECT_EQ(sink.count(), 1u);
}

TEST(Phase1, StarSelectsAllEdges) {
  // center 0; every adjacency list leads with the edge to 0
  Graph g(5, false, false);
  for (VertexId leaf = 1; leaf < 5; ++leaf) g.add_edge(0, leaf);
  CollectingSink sink;
  Phase1Result r = phase1_select_forest(g, sink);
  EXPECT_EQ(r.forest.edge_count, 4u);
  EXPECT_EQ(sink.edges().size(), 4u);
}

TEST(Phase1, BoundsAndAcyclicityOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t n = 2 + seed % 40;
    Graph g = gnp_random(n, 0.3, seed, false);
    CountingSink sink;
    Phase1Result r = phase1_select_forest(g, sink);
    EXPECT_TRUE(forest_is_acyclic(r.forest));
    EXPECT_GE(r.forest.edge_count, (n + 1) / 2);
    EXPECT_LE(r.forest.edge_count, n - 1);
    EXPECT_EQ(sink.count(), r.forest.edge_count);
    for (VertexId v = 0; v < n; ++v) EXPECT_GE(r.forest.neighbors[v].size(), 1u);
  }
}

TEST(Phase1, FirstEmissionIsFirstAdjacencyEntryOfVertexZero) {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    Graph g = gnp_random(20, 0.3, seed, false);
    CollectingSink sink;
    phase1_select_forest(g, sink);
    ASSERT_FALSE(sink.edges().empty());
    EXPECT_EQ(sink.edges()[0], EdgeRef::undirected(0, g.neighbors(0)[0].to));
  }
}

TEST(ExtensionPrim, TriangleWithPreselectedEdge) {
  Graph g(3, false, false);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  ForestAdjacency f;
  f.neighbors = {{1}, {0}, {}};
  f.edge_count = 1;
  PredecessorTree t = extension_prim(g, f);
  EXPECT_EQ(t.parent[0], kNoVertex);
  EXPECT_EQ(t.parent[1], 0u);
  // with this adjacency order, vertex 2 is reached from 0
  EXPECT_EQ(t.parent[2], 0u);
  EXPECT_EQ(tree_key_set(t).size(), 2u);
}

TEST(ExtensionPrim, TreeInputReproducesTree) {
  Graph g(5, false, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(3, 4);
  CountingSink sink;
  Phase1Result r = phase1_select_forest(g, sink);
  PredecessorTree t = extension_prim(g, r.forest);
  std::set<EdgeKey> expected{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  EXPECT_EQ(tree_key_set(t), expected);
}

TEST(ExtensionPrim, K4WithTwoComponentForest) {
  Graph g(4, false, false);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) g.add_edge(u, v);
  ForestAdjacency f;
  f.neighbors = {{1}, {0}, {3}, {2}};
  f.edge_count = 2;
  PredecessorTree t = extension_prim(g, f);
  auto tree = tree_key_set(t);
  EXPECT_EQ(tree.size(), 3u);
  EXPECT_TRUE(tree.count({0, 1}));
  EXPECT_TRUE(tree.count({2, 3}));
}

TEST(ExtensionPrim, ContainsForestAndStaysWithinQueueBound) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    std::size_t n = 2 + seed % 30;
    Graph g = gnp_random(n, 0.35, seed, false);
    CountingSink sink;
    Phase1Result r = phase1_select_forest(g, sink);
    ExtensionStats stats;
    PredecessorTree t = extension_prim(g, r.forest, &stats);
    auto tree = tree_key_set(t);
    EXPECT_EQ(tree.size(), n - 1);
    for (const auto& e : forest_key_set(r.forest)) EXPECT_TRUE(tree.count(e));
    EXPECT_LE(stats.peak_queue_entries, 2 * n);
    // exactly one root
    std::size_t nil_count = 0;
    for (VertexId v = 0; v < n; ++v)
      if (t.parent[v] == kNoVertex) ++nil_count;
    EXPECT_EQ(nil_count, 1u);
    EXPECT_EQ(t.parent[0], kNoVertex);
  }
}

TEST(EnumerateSt, PathEmitsBothEdgesInPhaseOne) {
  Graph g = path3();
  CollectingSink sink;
  enumerate_st(g, sink);
  ASSERT_EQ(sink.edges().size(), 2u);
  EXPECT_EQ(sink.edges()[0], EdgeRef::undirected(0, 1));
  EXPECT_EQ(sink.edges()[1], EdgeRef::undirected(1, 2));
}

TEST(EnumerateSt, TwoVertices) {
  Graph g(2, false, false);
  g.add_edge(0, 1);
  CollectingSink sink;
  enumerate_st(g, sink);
  ASSERT_EQ(sink.edges().size(), 1u);
  EXPECT_EQ(sink.edges()[0], EdgeRef::undirected(0, 1));
}

TEST(EnumerateSt, SingleVertexEmitsNothing) {
  Graph g(1, false, false);
  CollectingSink sink;
  enumerate_st(g, sink);
  EXPECT_TRUE(sink.edges().empty());
}

TEST(EnumerateSt, SeededGraphPassesChecker) {
  Graph g = gnp_random(12, 0.5, 7, false);
  CollectingSink sink;
  enumerate_st(g, sink);
  EXPECT_EQ(sink.edges().size(), 11u);
  TreeCheckReport rep = check_spanning_tree(g, sink.edges());
  EXPECT_TRUE(rep.is_spanning_tree) << rep.failure_reason;
}

TEST(EnumerateSt, ExactlyOnceEmission) {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    std::size_t n = 2 + seed % 25;
    Graph g = gnp_random(n, 0.4, seed, false);
    CollectingSink sink;
    enumerate_st(g, sink);
    EXPECT_EQ(sink.edges().size(), n - 1);
    EXPECT_EQ(key_set(sink.edges()).size(), n - 1);
    TreeCheckReport rep = check_spanning_tree(g, sink.edges());
    EXPECT_TRUE(rep.is_spanning_tree) << rep.failure_reason;
  }
}

TEST(EnumerateSt, RejectsDisconnected) {
  Graph g(4, false, false);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CountingSink sink;
  EXPECT_THROW(enumerate_st(g, sink), std::runtime_error);
}

TEST(EnumerateSt, RejectsWeightedInput) {
  Graph g(2, false, true);
  g.add_edge(0, 1, 3);
  CountingSink sink;
  EXPECT_THROW(enumerate_st(g, sink), std::invalid_argument);
}

TEST(EnumerateSt, RejectsDirectedInput) {
  Graph g(2, true, false);
  g.add_edge(0, 1);
  CountingSink sink;
  EXPECT_THROW(enumerate_st(g, sink), std::invalid_argument);
}

}  // namespace
}  // namespace spantree
