// Command line front end: generate instances, run one algorithm with timing,
// drive the benchmark protocol, or check a tree file against a graph.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spantree/adversarial.hpp"
#include "spantree/bench.hpp"
#include "spantree/dst.hpp"
#include "spantree/graph.hpp"
#include "spantree/mst_baselines.hpp"
#include "spantree/stream.hpp"

namespace {

using namespace spantree;

void write_edge_file(const std::string& path, const std::vector<EdgeRef>& edges) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

std::vector<EdgeRef> read_tree_file(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tree file: " + path);
  std::vector<EdgeRef> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra))
      throw std::runtime_error("bad tree line " + std::to_string(lineno) + " in " + path);
    VertexId a = static_cast<VertexId>(u);
    VertexId b = static_cast<VertexId>(v);
    edges.push_back(directed ? EdgeRef::directed(a, b) : EdgeRef::undirected(a, b));
  }
  return edges;
}

int do_gen(const std::string& family, std::size_t n, std::size_t k, double p,
           std::uint64_t seed, bool weighted, Weight wmin, Weight wmax,
           const std::string& out_path) {
  std::optional<Graph> g;
  if (family == "gnp") {
    g.emplace(gnp_random(n, p, seed, weighted, wmin, wmax));
  } else if (family == "two-cliques-bridge") {
    g.emplace(two_cliques_bridge(n).graph);
  } else if (family == "clique-plus-path") {
    g.emplace(clique_plus_path(n, k).graph);
  } else if (family == "directed-two-cliques") {
    g.emplace(directed_two_cliques(n).graph);
  } else if (family == "clique-path-rooted") {
    g.emplace(clique_path_rooted(n, k).graph);
  } else if (family == "weighted-bidirected-clique") {
    g.emplace(weighted_bidirected_clique(n).graph);
  } else {
    throw std::runtime_error("unknown family: " + family);
  }
  save_graph(*g, out_path);
  std::cout << "wrote " << out_path << " (n=" << g->vertex_count()
            << ", m=" << g->edge_count() << ")\n";
  return 0;
}

int do_run(const std::string& algo, const std::string& graph_path, VertexId root,
           const std::string& emit_edges, const std::string& emit_tree) {
  Graph g = load_graph(graph_path);
  RunOutcome out = run_algorithm(algo, g, root);

  if (!emit_edges.empty()) write_edge_file(emit_edges, out.edges);
  if (!emit_tree.empty()) write_edge_file(emit_tree, out.edges);

  std::cout << "emitted " << out.edges.size() << " edges\n";
  if (out.root) std::cout << "root=" << *out.root << "\n";
  std::cout << "first_output_ns=" << out.metrics.first_output_ns << "\n"
            << "max_delay_ns=" << out.metrics.max_delay_ns << "\n"
            << "max_incremental_delay_ns=" << out.metrics.max_incremental_delay_ns
            << "\n"
            << "total_time_ns=" << out.metrics.total_time_ns << "\n";

  TreeCheckReport rep = check_spanning_tree(g, out.edges, out.root);
  if (!rep.is_spanning_tree) {
    std::cout << "validity: FAIL (" << rep.failure_reason << ")\n";
    return 1;
  }
  std::cout << "validity: PASS\n";
  if (rep.total_weight) std::cout << "total_weight=" << *rep.total_weight << "\n";
  return 0;
}

int do_bench(const std::string& config_path, const std::string& out_dir,
             const std::string& emit_edges) {
  BenchConfig cfg = load_bench_config(config_path);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  run_benchmark(cfg, emit_edges);
  std::cout << "benchmark complete\n";
  return 0;
}

int do_check(const std::string& graph_path, const std::string& tree_path,
             std::optional<VertexId> root) {
  Graph g = load_graph(graph_path);
  std::vector<EdgeRef> edges = read_tree_file(tree_path, g.directed());
  TreeCheckReport rep = check_spanning_tree(g, edges, root);
  if (!rep.is_spanning_tree) {
    std::cout << "FAIL: " << rep.failure_reason << "\n";
    return 1;
  }
  std::cout << "PASS: " << edges.size() << " edges form a spanning tree\n";
  if (rep.total_weight) std::cout << "total_weight=" << *rep.total_weight << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning tree enumeration toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> families = {
      "gnp",
      "two-cliques-bridge",
      "clique-plus-path",
      "directed-two-cliques",
      "clique-path-rooted",
      "weighted-bidirected-clique"};

  std::string family;
  std::size_t gen_n = 0;
  std::size_t gen_k = 2;
  double gen_p = 0.25;
  std::uint64_t gen_seed = 1;
  bool gen_weighted = false;
  Weight gen_wmin = 1;
  Weight gen_wmax = 1000000000;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph file");
  gen->add_option("--family", family, "graph family")
      ->required()
      ->check(CLI::IsMember(families));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--k", gen_k, "clique size for clique families");
  gen->add_option("--p", gen_p, "edge probability for gnp");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_flag("--weighted", gen_weighted, "draw random weights (gnp)");
  gen->add_option("--wmin", gen_wmin, "minimum weight");
  gen->add_option("--wmax", gen_wmax, "maximum weight");
  gen->add_option("--out", gen_out, "output path")->required();

  const std::vector<std::string> algo_names = {
      "enum-st",        "enum-prim",          "enum-kruskal",
      "enum-boruvka",   "enum-prim-unsorted", "enum-kruskal-unsorted",
      "enum-boruvka-unsorted", "incremental-prim", "total-prim",
      "total-kruskal",  "total-boruvka",      "dst-rooted",
      "dst-unrooted"};

  std::string run_algo;
  std::string run_graph;
  VertexId run_root = 0;
  std::string run_emit_edges;
  std::string run_emit_tree;
  CLI::App* run = app.add_subcommand("run", "run one algorithm on a graph file");
  run->add_option("--algo", run_algo, "algorithm name")
      ->required()
      ->check(CLI::IsMember(algo_names));
  run->add_option("--graph", run_graph, "graph file")->required();
  run->add_option("--root", run_root, "root vertex for dst-rooted");
  run->add_option("--emit-edges", run_emit_edges, "write emitted edges here");
  run->add_option("--emit-tree", run_emit_tree, "write the resulting tree here");

  std::string bench_config;
  std::string bench_out_dir;
  std::string bench_emit_edges;
  CLI::App* bench = app.add_subcommand("bench", "run the benchmark protocol");
  bench->add_option("--config", bench_config, "benchmark config file")->required();
  bench->add_option("--out-dir", bench_out_dir, "override the configured output dir");
  bench->add_option("--emit-edges", bench_emit_edges, "debug dump of emitted edges");

  std::string check_graph;
  std::string check_tree;
  std::optional<VertexId> check_root;
  CLI::App* check = app.add_subcommand("check", "validate a tree file against a graph");
  check->add_option("--graph", check_graph, "graph file")->required();
  check->add_option("--tree", check_tree, "tree file, one 'u v' pair per line")
      ->required();
  check->add_option("--root", check_root, "expected root for directed trees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return do_gen(family, gen_n, gen_k, gen_p, gen_seed, gen_weighted, gen_wmin,
                    gen_wmax, gen_out);
    if (run->parsed())
      return do_run(run_algo, run_graph, run_root, run_emit_edges, run_emit_tree);
    if (bench->parsed()) return do_bench(bench_config, bench_out_dir, bench_emit_edges);
    if (check->parsed()) return do_check(check_graph, check_tree, check_root);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
