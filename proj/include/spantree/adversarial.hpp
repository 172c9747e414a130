#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "spantree/graph.hpp"

namespace spantree {

// A generated stress instance plus the vertex roles a caller may want to poke
// at and the edge count its closed form predicts.
struct AdversarialInstance {
  Graph graph;
  std::map<std::string, VertexId> roles;
  std::size_t expected_edge_count = 0;
};

// Two near-cliques joined by exactly two bridges, and the bridges are the very
// last edges of every list they appear on. Any spanning tree must cross, so an
// enumerator that trusts early adjacency entries pays for it here. Each clique
// is missing one internal edge (the one between its bridge endpoints) to keep
// the bridge pair from being shortcut.
inline AdversarialInstance two_cliques_bridge(std::size_t n) {
  if (n < 5)
    throw std::invalid_argument("two_cliques_bridge needs at least 5 vertices");
  std::size_t a = (n + 1) / 2;
  std::size_t b = n - a;
  std::size_t m = (a * (a - 1) / 2 - 1) + (b * (b - 1) / 2 - 1) + 2;

  Graph g(n, false, false);
  detail::GraphBuilder::reserve(g, m);
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = u + 1; v < a; ++v) {
      if (u == 0 && v == 1) continue;
      detail::GraphBuilder::append(g, u, v, std::nullopt);
    }
  for (VertexId u = a; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (u == a && v == a + 1) continue;
      detail::GraphBuilder::append(g, u, v, std::nullopt);
    }
  detail::GraphBuilder::append(g, 0, static_cast<VertexId>(a), std::nullopt);
  detail::GraphBuilder::append(g, 1, static_cast<VertexId>(a + 1), std::nullopt);

  AdversarialInstance inst{std::move(g), {}, m};
  inst.roles["bridge1_u"] = 0;
  inst.roles["bridge1_v"] = static_cast<VertexId>(a);
  inst.roles["bridge2_u"] = 1;
  inst.roles["bridge2_v"] = static_cast<VertexId>(a + 1);
  return inst;
}

// An expensive clique whose vertices all own a cheap spoke to the head of a
// cheap path. The unique minimum spanning tree is spokes plus path; the clique
// edges exist purely to be scanned and rejected, and every spoke hides at the
// end of its clique vertex's list.
inline AdversarialInstance clique_plus_path(std::size_t n, std::size_t k) {
  if (k < 2) throw std::invalid_argument("clique_plus_path needs a clique of at least 2");
  if (n <= k) throw std::invalid_argument("clique_plus_path needs vertices beyond the clique");
  std::size_t m = k * (k - 1) / 2 + k + (n - k - 1);

  Graph g(n, false, true);
  detail::GraphBuilder::reserve(g, m);
  for (VertexId u = 0; u < k; ++u)
    for (VertexId v = u + 1; v < k; ++v)
      detail::GraphBuilder::append(g, u, v, Weight{2});
  for (VertexId u = 0; u < k; ++u)
    detail::GraphBuilder::append(g, u, static_cast<VertexId>(k), Weight{1});
  for (VertexId v = k; v + 1 < n; ++v)
    detail::GraphBuilder::append(g, v, v + 1, Weight{1});

  AdversarialInstance inst{std::move(g), {}, m};
  inst.roles["path_head"] = static_cast<VertexId>(k);
  return inst;
}

// Two bidirected cliques; the second one is missing its (s, t) pair and owns
// the only crossing edges, s -> v and t -> v, appended last. The second clique
// is the unique source component, so the chosen root is s, the lowest id over
// there, and v can only hang off one of the crossings.
inline AdversarialInstance directed_two_cliques(std::size_t n) {
  if (n < 6)
    throw std::invalid_argument("directed_two_cliques needs at least 6 vertices");
  std::size_t a = (n + 1) / 2;
  std::size_t b = n - a;
  std::size_t m = a * (a - 1) + b * (b - 1);

  Graph g(n, true, false);
  detail::GraphBuilder::reserve(g, m);
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = u + 1; v < a; ++v) {
      detail::GraphBuilder::append(g, u, v, std::nullopt);
      detail::GraphBuilder::append(g, v, u, std::nullopt);
    }
  for (VertexId u = a; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (u == a && v == a + 1) continue;
      detail::GraphBuilder::append(g, u, v, std::nullopt);
      detail::GraphBuilder::append(g, v, u, std::nullopt);
    }
  detail::GraphBuilder::append(g, static_cast<VertexId>(a), 0, std::nullopt);
  detail::GraphBuilder::append(g, static_cast<VertexId>(a + 1), 0, std::nullopt);

  AdversarialInstance inst{std::move(g), {}, m};
  inst.roles["v"] = 0;
  inst.roles["s"] = static_cast<VertexId>(a);
  inst.roles["t"] = static_cast<VertexId>(a + 1);
  return inst;
}

// A rooted instance: bidirected clique on the first k vertices except that the
// cut vertex k-1 has no edge back to the root, a single one-way escape from
// the cut vertex onto a bidirected path, and back-to-root edges kept last.
// Only the fixed root spans this graph, and out-degrees stay below k.
inline AdversarialInstance clique_path_rooted(std::size_t n, std::size_t k) {
  if (k < 2) throw std::invalid_argument("clique_path_rooted needs a clique of at least 2");
  if (n <= k) throw std::invalid_argument("clique_path_rooted needs vertices beyond the clique");
  std::size_t m = k * (k - 1) + 2 * (n - k - 1);

  Graph g(n, true, false);
  detail::GraphBuilder::reserve(g, m);
  VertexId cut = static_cast<VertexId>(k - 1);
  for (VertexId u = 0; u < k; ++u) {
    for (VertexId v = 1; v < k; ++v)
      if (v != u) detail::GraphBuilder::append(g, u, v, std::nullopt);
    if (u == cut)
      detail::GraphBuilder::append(g, cut, static_cast<VertexId>(k), std::nullopt);
    else if (u != 0)
      detail::GraphBuilder::append(g, u, 0, std::nullopt);
  }
  for (VertexId v = k; v + 1 < n; ++v) {
    detail::GraphBuilder::append(g, v, v + 1, std::nullopt);
    detail::GraphBuilder::append(g, v + 1, v, std::nullopt);
  }

  AdversarialInstance inst{std::move(g), {}, m};
  inst.roles["root"] = 0;
  inst.roles["cut"] = cut;
  inst.roles["path_head"] = static_cast<VertexId>(k);
  return inst;
}

// Fully bidirected weighted clique split into two halves; every vertex lists
// its own half before the other one. All edges cost 2 except the single cheap
// edge from w (the first vertex of the second half) back to v = 0.
inline AdversarialInstance weighted_bidirected_clique(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("weighted_bidirected_clique needs at least 2 vertices");
  std::size_t h = n / 2;
  std::size_t m = n * (n - 1);

  Graph g(n, true, true);
  detail::GraphBuilder::reserve(g, m);
  auto cost = [h](VertexId from, VertexId to) {
    return (from == h && to == 0) ? Weight{1} : Weight{2};
  };
  for (VertexId u = 0; u < n; ++u) {
    bool first_half = u < h;
    std::size_t own_lo = first_half ? 0 : h;
    std::size_t own_hi = first_half ? h : n;
    std::size_t other_lo = first_half ? h : 0;
    std::size_t other_hi = first_half ? n : h;
    for (VertexId v = static_cast<VertexId>(own_lo); v < own_hi; ++v)
      if (v != u) detail::GraphBuilder::append(g, u, v, cost(u, v));
    for (VertexId v = static_cast<VertexId>(other_lo); v < other_hi; ++v)
      detail::GraphBuilder::append(g, u, v, cost(u, v));
  }

  AdversarialInstance inst{std::move(g), {}, m};
  inst.roles["v"] = 0;
  inst.roles["w"] = static_cast<VertexId>(h);
  return inst;
}

}  // namespace spantree
