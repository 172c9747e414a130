#pragma once

#include <stdexcept>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

// Rooted spanning tree as a parent array; the root stores kNoVertex.
struct PredecessorTree {
  std::vector<VertexId> parent;

  explicit PredecessorTree(std::size_t n = 0) : parent(n, kNoVertex) {}

  std::size_t link_count() const {
    std::size_t links = 0;
    for (VertexId p : parent)
      if (p != kNoVertex) ++links;
    return links;
  }
};

inline std::vector<EdgeRef> tree_edges_undirected(const PredecessorTree& t) {
  std::vector<EdgeRef> edges;
  edges.reserve(t.parent.size());
  for (VertexId v = 0; v < t.parent.size(); ++v)
    if (t.parent[v] != kNoVertex) edges.push_back(EdgeRef::undirected(t.parent[v], v));
  return edges;
}

inline std::vector<EdgeRef> tree_edges_directed(const PredecessorTree& t) {
  std::vector<EdgeRef> edges;
  edges.reserve(t.parent.size());
  for (VertexId v = 0; v < t.parent.size(); ++v)
    if (t.parent[v] != kNoVertex) edges.push_back(EdgeRef::directed(t.parent[v], v));
  return edges;
}

// Roots an undirected edge set at vertex 0 by iterative traversal.
inline PredecessorTree predecessor_tree_from_edges(std::size_t n,
                                                   const std::vector<EdgeRef>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("tree edge endpoint out of range");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  PredecessorTree t(n);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        t.parent[v] = u;
        stack.push_back(v);
      }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v])
      throw std::invalid_argument("edge set does not span all vertices");
  return t;
}

}  // namespace spantree
