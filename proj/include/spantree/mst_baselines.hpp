#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/predecessor_tree.hpp"
#include "spantree/stream.hpp"

namespace spantree {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(VertexId a, VertexId b) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    --components_;
    return true;
  }

  std::size_t component_count() const { return components_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_;
};

// Edge orderings are injected as strict total orders over canonical edges;
// totality is what lets every MST routine return the same unique tree.
using EdgeLess = std::function<bool(const EdgeRef&, const EdgeRef&)>;

struct WeightThenIdLess {
  bool operator()(const EdgeRef& a, const EdgeRef& b) const {
    Weight wa = a.weight.value_or(0);
    Weight wb = b.weight.value_or(0);
    if (wa != wb) return wa < wb;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }
};

inline EdgeLess weight_then_id_less() { return WeightThenIdLess{}; }

// Ranks a reference forest (partner[u] == v or partner[v] == u) strictly below
// every other edge, then orders by weight, then by canonical endpoint pair.
// A named type rather than a lambda so the solvers can recognize it behind
// EdgeLess and instantiate their hot loops on it directly; borrows the partner
// array and the graph, both of which must outlive the comparator.
struct PreselectedFirstLess {
  const VertexId* partner;
  const Graph* graph;

  bool in_forest(const EdgeRef& e) const {
    return partner[e.u] == e.v || partner[e.v] == e.u;
  }

  bool operator()(const EdgeRef& a, const EdgeRef& b) const {
    bool fa = in_forest(a);
    bool fb = in_forest(b);
    if (fa != fb) return fa;
    Weight wa = a.weight ? *a.weight : graph->edge_weight(a.u, a.v).value_or(0);
    Weight wb = b.weight ? *b.weight : graph->edge_weight(b.u, b.v).value_or(0);
    if (wa != wb) return wa < wb;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }
};

namespace detail {

inline void require_undirected(const Graph& g, const char* who) {
  if (g.directed())
    throw std::invalid_argument(std::string(who) + " needs an undirected graph");
}

inline std::vector<EdgeRef> canonical_edges(const Graph& g) {
  std::vector<EdgeRef> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    EdgeRef c = e.u < e.v ? e : EdgeRef{e.v, e.u, e.weight};
    edges.push_back(c);
  }
  return edges;
}

// EdgeLess erases the comparator type, which costs an indirect call per heap
// or sort comparison and dominates the solvers on dense graphs. The MST
// enumeration injects exactly one comparator type, so recover it and run the
// solver on the concrete type; anything else stays on the erased path.
template <class Run>
auto with_inlined_less(const EdgeLess& less, Run&& run) {
  if (const PreselectedFirstLess* fast = less.target<PreselectedFirstLess>())
    return run(*fast);
  return run(less);
}

// Jarnik/Prim growth from vertex 0 with a lazy-deletion binary heap. Emits an
// edge the moment it is accepted when a sink is given.
template <class Less>
PredecessorTree prim_impl(const Graph& g, Less less, EmissionSink* sink) {
  require_undirected(g, "prim");
  std::size_t n = g.vertex_count();
  PredecessorTree tree(n);
  if (n == 1) return tree;

  struct HeapGreater {
    Less less;
    bool operator()(const EdgeRef& a, const EdgeRef& b) const { return less(b, a); }
  };
  // every edge enters the heap at most once (its later endpoint sees the
  // earlier one visited), so edge_count bounds the live size; reserving up
  // front removes the geometric regrowth copies mid-run
  std::vector<EdgeRef> storage;
  storage.reserve(g.edge_count());
  std::priority_queue<EdgeRef, std::vector<EdgeRef>, HeapGreater> heap(
      HeapGreater{less}, std::move(storage));

  std::vector<bool> visited(n, false);
  visited[0] = true;
  auto push_frontier = [&](VertexId from) {
    for (const auto& e : g.neighbors(from))
      if (!visited[e.to]) {
        if (g.weighted())
          heap.push(EdgeRef::undirected(from, e.to, e.weight));
        else
          heap.push(EdgeRef::undirected(from, e.to));
      }
  };
  push_frontier(0);

  std::size_t accepted = 0;
  while (accepted + 1 < n) {
    if (heap.empty()) throw std::runtime_error("prim: graph is disconnected");
    EdgeRef e = heap.top();
    heap.pop();
    VertexId next = !visited[e.u] ? e.u : (!visited[e.v] ? e.v : kNoVertex);
    if (next == kNoVertex) continue;  // stale heap entry
    visited[next] = true;
    tree.parent[next] = next == e.u ? e.v : e.u;
    ++accepted;
    if (sink) sink->accept(e);
    push_frontier(next);
  }
  return tree;
}

template <class Less>
std::vector<EdgeRef> kruskal_impl(const Graph& g, Less less) {
  require_undirected(g, "kruskal");
  std::vector<EdgeRef> edges = canonical_edges(g);
  std::sort(edges.begin(), edges.end(), less);
  std::size_t n = g.vertex_count();
  UnionFind uf(n);
  std::vector<EdgeRef> tree;
  tree.reserve(n - 1);
  for (const auto& e : edges) {
    if (tree.size() + 1 == n) break;
    if (uf.unite(e.u, e.v)) tree.push_back(e);
  }
  if (tree.size() + 1 != n) throw std::runtime_error("kruskal: graph is disconnected");
  return tree;
}

template <class Less>
std::vector<EdgeRef> boruvka_impl(const Graph& g, Less less) {
  require_undirected(g, "boruvka");
  std::size_t n = g.vertex_count();
  std::vector<EdgeRef> edges = canonical_edges(g);
  UnionFind uf(n);
  std::vector<EdgeRef> tree;
  tree.reserve(n - 1);
  while (uf.component_count() > 1) {
    std::vector<std::optional<EdgeRef>> best(n);
    for (const auto& e : edges) {
      VertexId ru = uf.find(e.u);
      VertexId rv = uf.find(e.v);
      if (ru == rv) continue;
      if (!best[ru] || less(e, *best[ru])) best[ru] = e;
      if (!best[rv] || less(e, *best[rv])) best[rv] = e;
    }
    bool progressed = false;
    for (VertexId r = 0; r < n; ++r) {
      if (!best[r]) continue;
      // both endpoints' components can pick the same edge; the second unite
      // fails and drops the duplicate
      if (uf.unite(best[r]->u, best[r]->v)) {
        tree.push_back(*best[r]);
        progressed = true;
      }
    }
    if (!progressed) throw std::runtime_error("boruvka: graph is disconnected");
  }
  return tree;
}

}  // namespace detail

inline PredecessorTree prim(const Graph& g) {
  return detail::prim_impl(g, WeightThenIdLess{}, nullptr);
}

inline PredecessorTree prim(const Graph& g, const EdgeLess& less) {
  return detail::with_inlined_less(
      less, [&](const auto& cmp) { return detail::prim_impl(g, cmp, nullptr); });
}

// Prim reinterpreted as an enumeration algorithm: edges stream out as the
// frontier accepts them, so the k-th tree edge is available long before the
// run finishes.
inline PredecessorTree incremental_prim(const Graph& g, EmissionSink& sink) {
  return detail::prim_impl(g, WeightThenIdLess{}, &sink);
}

inline std::vector<EdgeRef> kruskal(const Graph& g) {
  return detail::kruskal_impl(g, WeightThenIdLess{});
}

inline std::vector<EdgeRef> kruskal(const Graph& g, const EdgeLess& less) {
  return detail::with_inlined_less(
      less, [&](const auto& cmp) { return detail::kruskal_impl(g, cmp); });
}

inline std::vector<EdgeRef> boruvka(const Graph& g) {
  return detail::boruvka_impl(g, WeightThenIdLess{});
}

inline std::vector<EdgeRef> boruvka(const Graph& g, const EdgeLess& less) {
  return detail::with_inlined_less(
      less, [&](const auto& cmp) { return detail::boruvka_impl(g, cmp); });
}

// Exhaustive minimum over all (n-1)-subsets; the oracle the fast paths are
// tested against. Capped hard because the combination count explodes.
inline Weight brute_force_mst_weight(const Graph& g) {
  detail::require_undirected(g, "brute_force_mst_weight");
  if (!g.weighted())
    throw std::invalid_argument("brute_force_mst_weight needs a weighted graph");
  std::size_t n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("brute_force_mst_weight is capped at 8 vertices");
  if (n == 1) return 0;

  std::vector<EdgeRef> edges = detail::canonical_edges(g);
  std::size_t m = edges.size();
  std::size_t pick = n - 1;
  if (m < pick) throw std::runtime_error("brute_force_mst_weight: graph is disconnected");

  std::optional<Weight> best;
  std::vector<bool> mask(m, false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(pick), mask.end(), true);
  do {
    UnionFind uf(n);
    Weight total = 0;
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!mask[i]) continue;
      if (uf.unite(edges[i].u, edges[i].v))
        total += edges[i].weight.value_or(0);
      else
        acyclic = false;
    }
    if (acyclic && uf.component_count() == 1 && (!best || total < *best)) best = total;
  } while (std::next_permutation(mask.begin(), mask.end()));

  if (!best) throw std::runtime_error("brute_force_mst_weight: graph is disconnected");
  return *best;
}

struct TreeCheckReport {
  bool is_spanning_tree = false;
  std::size_t edge_count = 0;
  std::optional<Weight> total_weight;
  std::string failure_reason;
};

namespace detail {

inline TreeCheckReport check_failed(TreeCheckReport rep, std::string reason) {
  rep.is_spanning_tree = false;
  rep.failure_reason = std::move(reason);
  return rep;
}

}  // namespace detail

// Validates a claimed spanning tree against its graph. For directed graphs the
// edges must form an out-tree; the root is inferred from in-degrees when not
// given. failure_reason is stable enough to grep ("count", "graph", "cycle").
inline TreeCheckReport check_spanning_tree(const Graph& g,
                                           const std::vector<EdgeRef>& edges,
                                           std::optional<VertexId> root = std::nullopt) {
  std::size_t n = g.vertex_count();
  TreeCheckReport rep;
  rep.edge_count = edges.size();

  if (edges.size() != n - 1)
    return detail::check_failed(rep, "edge count " + std::to_string(edges.size()) +
                                         " does not match n-1 = " + std::to_string(n - 1));

  Weight total = 0;
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      return detail::check_failed(rep, "edge (" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) +
                                           ") is not an edge of the graph");
    if (!g.has_edge(e.u, e.v))
      return detail::check_failed(rep, "edge (" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) +
                                           ") is not an edge of the graph");
    if (g.weighted()) total += g.edge_weight(e.u, e.v).value();
  }

  if (!g.directed()) {
    UnionFind uf(n);
    for (const auto& e : edges)
      if (!uf.unite(e.u, e.v))
        return detail::check_failed(rep, "edges contain a cycle through (" +
                                             std::to_string(e.u) + "," +
                                             std::to_string(e.v) + ")");
  } else {
    std::vector<std::vector<VertexId>> children(n);
    std::vector<std::uint8_t> indeg(n, 0);
    for (const auto& e : edges) {
      if (indeg[e.v] == 1)
        return detail::check_failed(
            rep, "vertex " + std::to_string(e.v) + " has two tree parents");
      indeg[e.v] = 1;
      children[e.u].push_back(e.v);
    }
    VertexId r = kNoVertex;
    for (VertexId v = 0; v < n; ++v)
      if (indeg[v] == 0) {
        if (r != kNoVertex)
          return detail::check_failed(rep, "more than one root candidate");
        r = v;
      }
    if (r == kNoVertex) return detail::check_failed(rep, "edges contain a cycle");
    if (root && *root != r)
      return detail::check_failed(rep, "root is " + std::to_string(r) +
                                           ", expected " + std::to_string(*root));
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{r};
    seen[r] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : children[u])
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != n)
      return detail::check_failed(rep, "not every vertex is reachable from the root");
  }

  rep.is_spanning_tree = true;
  if (g.weighted()) rep.total_weight = total;
  return rep;
}

}  // namespace spantree
