#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spantree {

using VertexId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// One edge as handed to sinks and checkers. Undirected edges are canonicalized
// (u < v); directed edges keep their orientation. Equality is on endpoints only.
struct EdgeRef {
  VertexId u = 0;
  VertexId v = 0;
  std::optional<Weight> weight;

  static EdgeRef undirected(VertexId a, VertexId b) {
    return a < b ? EdgeRef{a, b, std::nullopt} : EdgeRef{b, a, std::nullopt};
  }
  static EdgeRef undirected(VertexId a, VertexId b, Weight w) {
    return a < b ? EdgeRef{a, b, w} : EdgeRef{b, a, w};
  }
  static EdgeRef directed(VertexId a, VertexId b) { return EdgeRef{a, b, std::nullopt}; }
  static EdgeRef directed(VertexId a, VertexId b, Weight w) { return EdgeRef{a, b, w}; }

  friend bool operator==(const EdgeRef& x, const EdgeRef& y) {
    return x.u == y.u && x.v == y.v;
  }
  friend bool operator!=(const EdgeRef& x, const EdgeRef& y) { return !(x == y); }
};

inline std::ostream& operator<<(std::ostream& os, const EdgeRef& e) {
  os << '(' << e.u << ',' << e.v;
  if (e.weight) os << ",w=" << *e.weight;
  return os << ')';
}

struct AdjEntry {
  VertexId to;
  Weight weight;  // meaningful only on weighted graphs
};

namespace detail {
struct GraphBuilder;
}

// Simple graph over ids 0..n-1, adjacency lists in insertion order. The list
// order is part of the contract: several algorithms read "the first edge".
class Graph {
 public:
  Graph(std::size_t n, bool directed, bool weighted)
      : directed_(directed), weighted_(weighted), adj_(n) {
    if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  }

  std::size_t vertex_count() const { return adj_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(VertexId u, VertexId v) { add_edge_impl(u, v, std::nullopt); }
  void add_edge(VertexId u, VertexId v, Weight w) { add_edge_impl(u, v, w); }

  const std::vector<AdjEntry>& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
  }

  // out-degree on directed graphs
  std::size_t degree(VertexId v) const {
    check_vertex(v);
    return adj_[v].size();
  }

  // insertion log, original orientation preserved
  const std::vector<EdgeRef>& edges() const { return edges_; }

  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    for (const auto& e : adj_[u])
      if (e.to == v) return true;
    return false;
  }

  std::optional<Weight> edge_weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (!weighted_) return std::nullopt;
    for (const auto& e : adj_[u])
      if (e.to == v) return e.weight;
    return std::nullopt;
  }

 private:
  friend struct detail::GraphBuilder;

  void check_vertex(VertexId v) const {
    if (v >= adj_.size()) throw std::invalid_argument("vertex id out of range");
  }

  void add_edge_impl(VertexId u, VertexId v, std::optional<Weight> w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (w.has_value() != weighted_)
      throw std::invalid_argument(weighted_ ? "weighted graph needs an edge weight"
                                            : "unweighted graph takes no edge weight");
    for (const auto& e : adj_[u])
      if (e.to == v) throw std::invalid_argument("duplicate edge");
    append_unchecked(u, v, w);
  }

  void append_unchecked(VertexId u, VertexId v, std::optional<Weight> w) {
    Weight stored = w.value_or(0);
    adj_[u].push_back({v, stored});
    if (!directed_) adj_[v].push_back({u, stored});
    edges_.push_back(EdgeRef{u, v, w});
  }

  bool directed_;
  bool weighted_;
  std::vector<std::vector<AdjEntry>> adj_;
  std::vector<EdgeRef> edges_;
};

namespace detail {

// fast append for generators and the reader, which validate on their own terms
struct GraphBuilder {
  static void append(Graph& g, VertexId u, VertexId v, std::optional<Weight> w) {
    g.append_unchecked(u, v, w);
  }
  static void reserve(Graph& g, std::size_t edges) { g.edges_.reserve(edges); }
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t state = a;
  std::uint64_t h = splitmix64(state);
  state ^= b * 0x9e3779b97f4a7c15ull;
  h ^= splitmix64(state);
  state ^= c * 0xc2b2ae3d27d4eb4full;
  h ^= splitmix64(state);
  return h;
}

// uniform draw in [0,1) from the generator's top 53 bits; avoids the
// implementation-defined std distributions so seeds replay everywhere
inline double draw_unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

inline Weight draw_uniform_weight(std::mt19937_64& rng, Weight lo, Weight hi) {
  Weight span = hi - lo + 1;
  if (span == 0) return rng();  // whole 64-bit range
  if (span == 1) return lo;
  std::uint64_t mask = ~0ull >> std::countl_zero(span - 1);
  for (;;) {
    std::uint64_t x = rng() & mask;
    if (x < span) return lo + x;
  }
}

}  // namespace detail

// true iff every vertex is reachable from 0 when edge directions are ignored
inline bool is_connected(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> back;
  if (g.directed()) {
    back.resize(n);
    for (VertexId u = 0; u < n; ++u)
      for (const auto& e : g.neighbors(u)) back[e.to].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    auto visit = [&](VertexId to) {
      if (!seen[to]) {
        seen[to] = true;
        ++reached;
        stack.push_back(to);
      }
    };
    for (const auto& e : g.neighbors(u)) visit(e.to);
    if (g.directed())
      for (VertexId from : back[u]) visit(from);
  }
  return reached == n;
}

struct DegreeStats {
  std::size_t max_degree = 0;
  std::size_t degree_sum = 0;
  std::size_t vertex_count = 0;

  double average() const {
    return static_cast<double>(degree_sum) / static_cast<double>(vertex_count);
  }
};

// out-degrees on directed graphs
inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.vertex_count = g.vertex_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t d = g.degree(v);
    s.degree_sum += d;
    if (d > s.max_degree) s.max_degree = d;
  }
  return s;
}

// G(n,p) conditioned on connectivity: disconnected draws are rejected and the
// seed advanced, which keeps the distribution clean (unlike patching edges in)
inline Graph gnp_random(std::size_t n, double p, std::uint64_t seed, bool weighted,
                        Weight weight_lo = 1, Weight weight_hi = 1000000000) {
  if (n == 0) throw std::invalid_argument("gnp_random: n must be positive");
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("gnp_random: need 0 < p <= 1");
  if (weighted && weight_lo > weight_hi)
    throw std::invalid_argument("gnp_random: empty weight range");

  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    Graph g(n, false, weighted);
    for (VertexId u = 0; u + 1 < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) {
        if (detail::draw_unit(rng) < p) {
          std::optional<Weight> w;
          if (weighted) w = detail::draw_uniform_weight(rng, weight_lo, weight_hi);
          detail::GraphBuilder::append(g, u, v, w);
        }
      }
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("gnp_random: no connected graph for n=" + std::to_string(n) +
                           " p=" + std::to_string(p) + " after " +
                           std::to_string(kMaxAttempts) + " attempts");
}

// replays the insertion log without weights, so adjacency order is preserved
inline Graph strip_weights(const Graph& g) {
  Graph out(g.vertex_count(), g.directed(), false);
  detail::GraphBuilder::reserve(out, g.edge_count());
  for (const auto& e : g.edges()) detail::GraphBuilder::append(out, e.u, e.v, std::nullopt);
  return out;
}

// Text format: one header line `n m directed weighted` (flags 0/1), then m
// lines `u v` or `u v w`. Edge order in the file is the insertion order.
inline void write_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.directed() ? 1 : 0)
      << ' ' << (g.weighted() ? 1 : 0) << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight) out << ' ' << *e.weight;
    out << '\n';
  }
}

namespace detail {

inline std::runtime_error graph_parse_error(std::size_t line_no, const std::string& what) {
  return std::runtime_error("graph text line " + std::to_string(line_no) + ": " + what);
}

inline bool line_is_blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("graph text: empty input");

  std::istringstream header(line);
  std::uint64_t n = 0, m = 0;
  int directed_flag = -1, weighted_flag = -1;
  if (!(header >> n >> m >> directed_flag >> weighted_flag))
    throw detail::graph_parse_error(1, "bad header, want `n m directed weighted`");
  std::string extra;
  if (header >> extra) throw detail::graph_parse_error(1, "trailing tokens in header");
  if (n == 0) throw detail::graph_parse_error(1, "graph needs at least one vertex");
  if (directed_flag != 0 && directed_flag != 1)
    throw detail::graph_parse_error(1, "directed flag must be 0 or 1");
  if (weighted_flag != 0 && weighted_flag != 1)
    throw detail::graph_parse_error(1, "weighted flag must be 0 or 1");

  bool directed = directed_flag == 1;
  bool weighted = weighted_flag == 1;
  Graph g(n, directed, weighted);
  detail::GraphBuilder::reserve(g, m);

  std::istringstream fields;
  for (std::uint64_t i = 0; i < m; ++i) {
    std::size_t line_no = i + 2;
    if (!std::getline(in, line))
      throw std::runtime_error("graph text: expected " + std::to_string(m) +
                               " edges, file ends after " + std::to_string(i));
    fields.clear();
    fields.str(line);
    std::uint64_t u = 0, v = 0;
    if (!(fields >> u >> v)) throw detail::graph_parse_error(line_no, "bad edge line");
    if (u >= n || v >= n) throw detail::graph_parse_error(line_no, "vertex id out of range");
    if (u == v) throw detail::graph_parse_error(line_no, "self-loop");
    std::optional<Weight> w;
    if (weighted) {
      Weight value = 0;
      if (!(fields >> value)) throw detail::graph_parse_error(line_no, "missing weight");
      w = value;
    }
    if (fields >> extra) throw detail::graph_parse_error(line_no, "trailing tokens");
    detail::GraphBuilder::append(g, static_cast<VertexId>(u), static_cast<VertexId>(v), w);
  }
  while (std::getline(in, line))
    if (!detail::line_is_blank(line))
      throw std::runtime_error("graph text: content past the declared edge count");

  // duplicate detection over sorted copies, cheaper than scanning on every add
  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (directed)
      keys.emplace_back(e.u, e.v);
    else
      keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i)
    if (keys[i] == keys[i - 1])
      throw std::runtime_error("graph text: duplicate edge " +
                               std::to_string(keys[i].first) + " " +
                               std::to_string(keys[i].second));
  return g;
}

inline void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_graph(g, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_graph(in);
}

}  // namespace spantree
