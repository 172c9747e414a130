#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/predecessor_tree.hpp"
#include "spantree/stream.hpp"

namespace spantree {

// Undirected forest kept as symmetric adjacency lists.
struct ForestAdjacency {
  std::vector<std::vector<VertexId>> neighbors;
  std::size_t edge_count = 0;
};

struct Phase1Result {
  ForestAdjacency forest;
  DegreeStats degrees;
};

// Credit-accumulation pass: every vertex not yet touched by the forest selects
// the first edge of its adjacency list. Each selected edge can be charged to
// the vertex that picked it, which is why the result is a forest: a cycle
// would need some vertex to pick twice. Selections are emitted immediately,
// giving k >= ceil(n/2) head-start edges.
inline Phase1Result phase1_select_forest(const Graph& g, EmissionSink& sink) {
  std::size_t n = g.vertex_count();
  Phase1Result r;
  r.forest.neighbors.resize(n);
  r.degrees = degree_stats(g);
  for (VertexId u = 0; u < n; ++u) {
    if (!r.forest.neighbors[u].empty()) continue;
    const auto& adj = g.neighbors(u);
    if (adj.empty()) {
      if (n == 1) continue;
      throw std::runtime_error("graph is disconnected (isolated vertex " +
                               std::to_string(u) + ")");
    }
    VertexId w = adj[0].to;
    r.forest.neighbors[u].push_back(w);
    r.forest.neighbors[w].push_back(u);
    ++r.forest.edge_count;
    sink.accept(EdgeRef::undirected(u, w));
  }
  return r;
}

struct ExtensionStats {
  std::size_t peak_queue_entries = 0;
};

namespace detail {

// One paused adjacency scan: edges of `source` before `cursor` are dealt with.
struct PendingScan {
  VertexId source;
  std::size_t cursor;
};

}  // namespace detail

// Extends a preselected forest to a spanning tree rooted at 0. Two FIFO
// queues hold paused scans: forest scans always pop before whole-graph scans,
// so each forest component is flooded through its own edges the moment the
// traversal first touches it. That keeps every preselected edge in the tree.
// Each discovered vertex adds one entry per queue, hence at most 2n entries.
inline PredecessorTree extension_prim(const Graph& g, const ForestAdjacency& f,
                                      ExtensionStats* stats = nullptr) {
  std::size_t n = g.vertex_count();
  PredecessorTree tree(n);
  std::deque<detail::PendingScan> forest_q, graph_q;
  std::size_t peak = 0;

  std::size_t discovered = 0;
  auto discover = [&](VertexId v, VertexId from) {
    tree.parent[v] = from;
    ++discovered;
    forest_q.push_back({v, 0});
    graph_q.push_back({v, 0});
    std::size_t live = forest_q.size() + graph_q.size();
    if (live > peak) peak = live;
  };
  discover(0, 0);  // self-parent marks the root visited; cleared at the end

  while (!forest_q.empty() || !graph_q.empty()) {
    bool from_forest = !forest_q.empty();
    std::deque<detail::PendingScan>& q = from_forest ? forest_q : graph_q;
    detail::PendingScan scan = q.front();
    q.pop_front();
    if (from_forest) {
      const auto& list = f.neighbors[scan.source];
      while (scan.cursor < list.size() && tree.parent[list[scan.cursor]] != kNoVertex)
        ++scan.cursor;
      if (scan.cursor < list.size()) {
        discover(list[scan.cursor], scan.source);
        ++scan.cursor;
        if (scan.cursor < list.size()) q.push_back(scan);
      }
    } else {
      const auto& list = g.neighbors(scan.source);
      while (scan.cursor < list.size() && tree.parent[list[scan.cursor].to] != kNoVertex)
        ++scan.cursor;
      if (scan.cursor < list.size()) {
        discover(list[scan.cursor].to, scan.source);
        ++scan.cursor;
        if (scan.cursor < list.size()) q.push_back(scan);
      }
    }
  }

  tree.parent[0] = kNoVertex;
  if (stats) stats->peak_queue_entries = peak;
  if (discovered != n) throw std::runtime_error("graph is disconnected");
  return tree;
}

// Emits the edges of one spanning tree: preselected forest edges first, then
// the extension remainder, each edge exactly once.
inline void enumerate_st(const Graph& g, EmissionSink& sink) {
  if (g.directed()) throw std::invalid_argument("enumerate_st needs an undirected graph");
  if (g.weighted()) throw std::invalid_argument("enumerate_st needs an unweighted graph");
  std::size_t n = g.vertex_count();
  if (n == 1) return;

  Phase1Result phase1 = phase1_select_forest(g, sink);
  PredecessorTree tree = extension_prim(g, phase1.forest);

  // stamp[w] == v marks w as a forest neighbor of v during v's turn
  std::vector<VertexId> stamp(n, kNoVertex);
  SolutionQueue pending;
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = tree.parent[v];
    if (p == kNoVertex) continue;
    for (VertexId w : phase1.forest.neighbors[v]) stamp[w] = v;
    if (stamp[p] != v) pending.push(EdgeRef::undirected(p, v));
  }
  if (phase1.forest.edge_count + pending.size() != n - 1)
    throw std::logic_error("enumerate_st: tree does not split into forest plus remainder");
  while (!pending.empty()) sink.accept(pending.pop());
}

}  // namespace spantree
