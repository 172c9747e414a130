#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/predecessor_tree.hpp"
#include "spantree/stream.hpp"

namespace spantree {

// Spanning arborescence from a fixed root, edges emitted the moment their head
// is discovered. Breadth-first order, so the emitted tree realizes the BFS
// distances from the root.
inline void enumerate_dst_rooted(const Graph& g, VertexId root, EmissionSink& sink) {
  if (!g.directed())
    throw std::invalid_argument("enumerate_dst_rooted needs a directed graph");
  std::size_t n = g.vertex_count();
  if (root >= n) throw std::invalid_argument("enumerate_dst_rooted: root out of range");

  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  seen[root] = true;
  frontier.push(root);
  std::size_t discovered = 1;
  while (!frontier.empty()) {
    VertexId u = frontier.front();
    frontier.pop();
    for (const auto& e : g.neighbors(u)) {
      if (seen[e.to]) continue;
      seen[e.to] = true;
      ++discovered;
      sink.accept(EdgeRef::directed(u, e.to));
      frontier.push(e.to);
    }
  }
  if (discovered != n) {
    VertexId missing = 0;
    while (seen[missing]) ++missing;
    throw std::runtime_error("vertex " + std::to_string(missing) +
                             " is unreachable from root " + std::to_string(root));
  }
}

struct SccLabeling {
  std::vector<std::size_t> component;
  std::size_t count = 0;
  std::vector<std::vector<VertexId>> members;
};

// Tarjan's strongly connected components with an explicit frame stack; the
// input may be arbitrarily deep (a recursive version dies on a long path).
inline SccLabeling tarjan_scc(const Graph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::size_t n = g.vertex_count();

  SccLabeling out;
  out.component.assign(n, kUnset);
  std::vector<std::size_t> index(n, kUnset);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::size_t next_index = 0;

  for (VertexId start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    frames.push_back({start, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        VertexId w = adj[f.next++].to;
        if (index[w] == kUnset) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});  // f is invalid from here on
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      frames.pop_back();
      if (!frames.empty())
        lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      if (lowlink[v] == index[v]) {
        out.members.emplace_back();
        while (true) {
          VertexId w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = out.count;
          out.members.back().push_back(w);
          if (w == v) break;
        }
        ++out.count;
      }
    }
  }
  return out;
}

// Root discovery without a transpose pass: a digraph has a spanning
// arborescence iff its condensation has exactly one source component, and the
// valid roots are exactly that component's members. The lowest id among them
// is returned together with a depth-first tree from it.
inline std::pair<VertexId, PredecessorTree> dst_unrooted(const Graph& g) {
  if (!g.directed()) throw std::invalid_argument("dst_unrooted needs a directed graph");
  std::size_t n = g.vertex_count();

  SccLabeling scc = tarjan_scc(g);
  std::vector<bool> has_incoming(scc.count, false);
  for (const auto& e : g.edges())
    if (scc.component[e.u] != scc.component[e.v]) has_incoming[scc.component[e.v]] = true;

  std::size_t sources = 0;
  std::size_t source_comp = 0;
  for (std::size_t c = 0; c < scc.count; ++c)
    if (!has_incoming[c]) {
      ++sources;
      source_comp = c;
    }
  if (sources != 1)
    throw std::runtime_error("no directed spanning tree: " + std::to_string(sources) +
                             " source components");

  VertexId root = *std::min_element(scc.members[source_comp].begin(),
                                    scc.members[source_comp].end());

  PredecessorTree tree(n);
  std::vector<VertexId> stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  std::size_t discovered = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& e : g.neighbors(u)) {
      if (seen[e.to]) continue;
      seen[e.to] = true;
      tree.parent[e.to] = u;
      ++discovered;
      stack.push_back(e.to);
    }
  }
  if (discovered != n)
    throw std::logic_error("dst_unrooted: source component cannot reach the whole graph");
  return {root, tree};
}

}  // namespace spantree
