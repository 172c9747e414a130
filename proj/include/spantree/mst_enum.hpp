#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/mst_baselines.hpp"
#include "spantree/predecessor_tree.hpp"
#include "spantree/stream.hpp"

namespace spantree {

// Result of one selection round: partner[u] is the neighbor u's selection was
// recorded with, or kNoVertex if u's favorite edge was recorded by the other
// endpoint. preselected() answers "is this edge in the round's forest".
struct OriginArray {
  std::vector<VertexId> partner;
  std::size_t selected_count = 0;
  Weight min_weight = 0;

  bool preselected(VertexId u, VertexId v) const {
    return partner[u] == v || partner[v] == u;
  }
};

namespace detail {

// One Boruvka-style round, streamed. Vertices are processed in the given
// order (identity when order/rank are null); each vertex computes its
// cheapest incident edge, ties broken by the neighbor's processing rank, and
// the selection is reported the moment the vertex's list scan finishes, so
// the first edge is out after a single adjacency list. An edge favored from
// both sides is recorded once, by the endpoint processed first; its pick is
// final by then, which is what makes the single pass sound. The per-vertex
// keys (weight, rank) are pairwise distinct, so the selection is a forest of
// at least ceil(n/2) edges contained in some minimum spanning tree.
template <class OnSelect>
OriginArray boruvka_round_impl(const Graph& g, const VertexId* order,
                               const VertexId* rank, OnSelect&& on_select) {
  require_undirected(g, "boruvka_round");
  if (!g.weighted()) throw std::invalid_argument("boruvka_round needs a weighted graph");
  std::size_t n = g.vertex_count();

  OriginArray out;
  out.partner.assign(n, kNoVertex);
  if (n == 1) return out;

  std::vector<VertexId> best(n, kNoVertex);
  bool any_edge = false;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId u = order ? order[i] : static_cast<VertexId>(i);
    const auto& adj = g.neighbors(u);
    if (adj.empty())
      throw std::runtime_error("graph is disconnected (isolated vertex " +
                               std::to_string(u) + ")");
    VertexId pick = adj[0].to;
    Weight pick_w = adj[0].weight;
    VertexId pick_rank = rank ? rank[pick] : pick;
    for (std::size_t j = 1; j < adj.size(); ++j) {
      const AdjEntry& e = adj[j];
      VertexId r = rank ? rank[e.to] : e.to;
      if (e.weight < pick_w || (e.weight == pick_w && r < pick_rank)) {
        pick = e.to;
        pick_w = e.weight;
        pick_rank = r;
      }
    }
    best[u] = pick;
    if (!any_edge || pick_w < out.min_weight) out.min_weight = pick_w;
    any_edge = true;
    // the favorite of an earlier-processed vertex is already recorded when it
    // points back at u
    if (static_cast<std::size_t>(pick_rank) < i && best[pick] == u) continue;
    out.partner[u] = pick;
    ++out.selected_count;
    on_select(EdgeRef::undirected(u, pick, pick_w));
  }
  return out;
}

}  // namespace detail

inline OriginArray boruvka_round(const Graph& g) {
  return detail::boruvka_round_impl(g, nullptr, nullptr, [](const EdgeRef&) {});
}

// Strict total order that ranks the round's forest strictly below every other
// edge, then by weight, then by canonical endpoint pair. Under any such order
// the MST is unique and contains the forest, so an arbitrary MST black box
// must keep every preselected edge. The graph and origin data must outlive
// the returned comparator.
inline EdgeLess preselected_comparator(const Graph& g, const OriginArray& f) {
  return PreselectedFirstLess{f.partner.data(), &g};
}

// Any MST routine driven purely by an edge order: hand it the graph plus a
// strict total order, get back a rooted minimum spanning tree.
using BlackBoxMst = std::function<PredecessorTree(const Graph&, const EdgeLess&)>;

inline BlackBoxMst prim_blackbox() {
  return [](const Graph& g, const EdgeLess& less) { return prim(g, less); };
}

inline BlackBoxMst kruskal_blackbox() {
  return [](const Graph& g, const EdgeLess& less) {
    return predecessor_tree_from_edges(g.vertex_count(), kruskal(g, less));
  };
}

inline BlackBoxMst boruvka_blackbox() {
  return [](const Graph& g, const EdgeLess& less) {
    return predecessor_tree_from_edges(g.vertex_count(), boruvka(g, less));
  };
}

struct MstRunInfo {
  Weight min_weight = 0;
  std::size_t preselected_count = 0;
};

namespace detail {

// Phases two and three, shared by both enumeration entry points: the black
// box completes the already-emitted forest under the preselected-first order,
// then the finalization walk emits the remainder exactly once.
inline void complete_mst(const Graph& g, const OriginArray& round,
                         const BlackBoxMst& black_box, EmissionSink& sink,
                         MstRunInfo* info) {
  std::size_t n = g.vertex_count();
  if (info) {
    info->min_weight = round.min_weight;
    info->preselected_count = round.selected_count;
  }

  EdgeLess less = preselected_comparator(g, round);
  PredecessorTree tree = black_box(g, less);

  if (tree.parent.size() != n || tree.link_count() != n - 1)
    throw std::logic_error("enumerate_mst: black box did not return a spanning tree");
  for (VertexId u = 0; u < n; ++u) {
    VertexId v = round.partner[u];
    if (v == kNoVertex) continue;
    if (tree.parent[u] != v && tree.parent[v] != u)
      throw std::logic_error("enumerate_mst: black box dropped a preselected edge");
  }

  SolutionQueue pending;
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = tree.parent[v];
    if (p == kNoVertex) continue;
    if (!round.preselected(p, v)) pending.push(EdgeRef::undirected(p, v));
  }
  if (round.selected_count + pending.size() != n - 1)
    throw std::logic_error("enumerate_mst: tree does not split into forest plus remainder");
  while (!pending.empty()) sink.accept(pending.pop());
}

}  // namespace detail

// MST enumeration in three phases: a selection round streams out a head-start
// forest while it scans, the black box completes it under the
// preselected-first order, and the finalization walk emits the rest.
inline void enumerate_mst(const Graph& g, const BlackBoxMst& black_box,
                          EmissionSink& sink, MstRunInfo* info = nullptr) {
  detail::require_undirected(g, "enumerate_mst");
  if (!g.weighted()) throw std::invalid_argument("enumerate_mst needs a weighted graph");
  if (info) *info = MstRunInfo{};
  if (g.vertex_count() == 1) return;

  OriginArray round = detail::boruvka_round_impl(
      g, nullptr, nullptr, [&sink](const EdgeRef& e) { sink.accept(e); });
  detail::complete_mst(g, round, black_box, sink, info);
}

struct VertexRelabeling {
  std::vector<VertexId> old_to_new;
  std::vector<VertexId> new_to_old;
};

// Counting sort of the vertices by ascending degree, stable in the old id, so
// any prefix of the new order has average degree at most the graph's average.
inline VertexRelabeling degree_sort_relabeling(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::size_t> offset(n, 0);
  for (VertexId v = 0; v < n; ++v) ++offset[g.degree(v)];
  // in-place exclusive prefix sum: offset[d] becomes the first slot of degree d
  std::size_t running = 0;
  for (std::size_t d = 0; d < n; ++d) {
    std::size_t here = offset[d];
    offset[d] = running;
    running += here;
  }
  VertexRelabeling r;
  r.new_to_old.resize(n);
  r.old_to_new.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t pos = offset[g.degree(v)]++;
    r.new_to_old[pos] = v;
    r.old_to_new[v] = static_cast<VertexId>(pos);
  }
  return r;
}

// Same pipeline with the round driven in ascending-degree order: low-degree
// vertices are scanned first, which caps the work in front of each early
// emission. The relabeling is only a view; the round, the black box, and all
// emitted edges stay in the caller's vertex ids.
inline void enumerate_mst_degree_sorted(const Graph& g, const BlackBoxMst& black_box,
                                        EmissionSink& sink, MstRunInfo* info = nullptr) {
  detail::require_undirected(g, "enumerate_mst_degree_sorted");
  if (!g.weighted())
    throw std::invalid_argument("enumerate_mst_degree_sorted needs a weighted graph");
  if (info) *info = MstRunInfo{};
  if (g.vertex_count() == 1) return;

  VertexRelabeling r = degree_sort_relabeling(g);
  OriginArray round = detail::boruvka_round_impl(
      g, r.new_to_old.data(), r.old_to_new.data(),
      [&sink](const EdgeRef& e) { sink.accept(e); });
  detail::complete_mst(g, round, black_box, sink, info);
}

}  // namespace spantree
