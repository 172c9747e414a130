#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spantree/dst.hpp"
#include "spantree/graph.hpp"
#include "spantree/mst_baselines.hpp"
#include "spantree/mst_enum.hpp"
#include "spantree/predecessor_tree.hpp"
#include "spantree/st_enum.hpp"
#include "spantree/stream.hpp"

namespace spantree {

// Nearest-rank quartiles (1-based ranks ceil(len/4) and ceil(3*len/4)) over an
// unsorted sample.
inline std::pair<std::uint64_t, std::uint64_t> quartiles(std::vector<std::uint64_t> samples) {
  if (samples.empty()) throw std::invalid_argument("quartiles of an empty sample");
  std::sort(samples.begin(), samples.end());
  std::size_t len = samples.size();
  std::size_t lo_rank = (len + 3) / 4;
  std::size_t hi_rank = (3 * len + 3) / 4;
  return {samples[lo_rank - 1], samples[hi_rank - 1]};
}

struct BenchConfig {
  std::vector<std::size_t> sizes;
  bool p_is_exponent = false;
  double p_value = 0.25;
  std::size_t instances_per_size = 10;
  std::size_t runs_per_instance = 5;
  std::vector<std::string> algorithms;
  std::uint64_t seed = 1;
  std::string output_dir;
};

// Edge probability for one size: either the fixed value or n^-exponent.
inline double edge_probability(const BenchConfig& cfg, std::size_t n) {
  if (cfg.p_is_exponent) return std::pow(static_cast<double>(n), -cfg.p_value);
  return cfg.p_value;
}

// Short printable form of the probability rule, used in output file names.
inline std::string probability_label(const BenchConfig& cfg) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), cfg.p_is_exponent ? "n^-%g" : "%g", cfg.p_value);
  return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

inline std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (text.empty() || text[0] == '-') throw std::invalid_argument(text);
    v = std::stoull(text, &pos);
  } catch (...) {
    throw std::runtime_error("bad value for " + what + ": '" + text + "'");
  }
  if (pos != text.size())
    throw std::runtime_error("bad value for " + what + ": '" + text + "'");
  return v;
}

inline double parse_double(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (...) {
    throw std::runtime_error("bad value for " + what + ": '" + text + "'");
  }
  if (pos != text.size())
    throw std::runtime_error("bad value for " + what + ": '" + text + "'");
  return v;
}

}  // namespace detail

// key = value configuration, one entry per line, '#' comments. Recognized
// keys: sizes, p, instances_per_size, runs_per_instance, algorithms, seed,
// output_dir. The probability accepts a constant in (0, 1] or the form
// n^-<exponent> evaluated per size.
inline BenchConfig parse_bench_config(const std::string& text) {
  BenchConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               " is not of the form key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (key == "sizes") {
      cfg.sizes.clear();
      for (const std::string& item : detail::split_list(value))
        cfg.sizes.push_back(detail::parse_uint(item, "sizes"));
    } else if (key == "p") {
      if (value.rfind("n^-", 0) == 0) {
        cfg.p_is_exponent = true;
        cfg.p_value = detail::parse_double(value.substr(3), "p");
      } else {
        cfg.p_is_exponent = false;
        cfg.p_value = detail::parse_double(value, "p");
      }
    } else if (key == "instances_per_size") {
      cfg.instances_per_size = detail::parse_uint(value, "instances_per_size");
    } else if (key == "runs_per_instance") {
      cfg.runs_per_instance = detail::parse_uint(value, "runs_per_instance");
    } else if (key == "algorithms") {
      cfg.algorithms = detail::split_list(value);
    } else if (key == "seed") {
      cfg.seed = detail::parse_uint(value, "seed");
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else {
      throw std::runtime_error("unknown config key '" + key + "' on line " +
                               std::to_string(lineno));
    }
  }
  if (cfg.sizes.empty()) throw std::runtime_error("config does not list any sizes");
  for (std::size_t n : cfg.sizes)
    if (n == 0) throw std::runtime_error("sizes must be positive");
  if (cfg.algorithms.empty())
    throw std::runtime_error("config does not list any algorithms");
  if (cfg.p_is_exponent) {
    if (!(cfg.p_value > 0)) throw std::runtime_error("probability exponent must be positive");
  } else if (!(cfg.p_value > 0) || cfg.p_value > 1.0) {
    throw std::runtime_error("probability must lie in (0, 1]");
  }
  if (cfg.instances_per_size == 0)
    throw std::runtime_error("instances_per_size must be positive");
  if (cfg.runs_per_instance == 0)
    throw std::runtime_error("runs_per_instance must be positive");
  return cfg;
}

inline BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open benchmark config: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_bench_config(text.str());
}

// Algorithms the benchmark runner accepts; the two dst variants are runnable
// through run_algorithm but excluded from the undirected benchmark protocol.
inline const std::vector<std::string>& benchmark_algorithm_names() {
  static const std::vector<std::string> names = {
      "enum-st",           "enum-prim",
      "enum-kruskal",      "enum-boruvka",
      "enum-prim-unsorted", "enum-kruskal-unsorted",
      "enum-boruvka-unsorted", "incremental-prim",
      "total-prim",        "total-kruskal",
      "total-boruvka"};
  return names;
}

inline bool is_directed_algorithm(const std::string& name) {
  return name == "dst-rooted" || name == "dst-unrooted";
}

struct RunOutcome {
  StreamMetrics metrics;
  std::vector<EdgeRef> edges;
  std::optional<VertexId> root;
};

namespace detail {

inline std::uint64_t ns_between(std::chrono::steady_clock::time_point a,
                                std::chrono::steady_clock::time_point b) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
}

// Bulk algorithms get one stopwatch around the whole call; every per-edge
// metric degenerates to the total.
template <class Run>
RunOutcome timed_bulk(Run&& run) {
  auto start = std::chrono::steady_clock::now();
  std::vector<EdgeRef> edges = run();
  std::uint64_t total = ns_between(start, std::chrono::steady_clock::now());
  RunOutcome out;
  out.edges = std::move(edges);
  out.metrics = StreamMetrics{total, total, total, total, out.edges.size()};
  return out;
}

template <class Run>
RunOutcome timed_stream(Run&& run) {
  CollectingSink sink;
  run(sink);
  std::uint64_t total = sink.elapsed_ns();
  RunOutcome out;
  out.edges = sink.edges();
  if (sink.timestamps_ns().empty())
    out.metrics = StreamMetrics{total, total, total, total, 0};
  else
    out.metrics = metrics_from_timestamps(sink.timestamps_ns(), total);
  return out;
}

}  // namespace detail

// Run one named algorithm on a graph and report edges plus timing. The root
// argument only matters for dst-rooted.
inline RunOutcome run_algorithm(const std::string& name, const Graph& g,
                                VertexId root = 0) {
  if (name == "enum-st")
    return detail::timed_stream([&](EmissionSink& s) { enumerate_st(g, s); });
  if (name == "enum-prim")
    return detail::timed_stream(
        [&](EmissionSink& s) { enumerate_mst_degree_sorted(g, prim_blackbox(), s); });
  if (name == "enum-kruskal")
    return detail::timed_stream(
        [&](EmissionSink& s) { enumerate_mst_degree_sorted(g, kruskal_blackbox(), s); });
  if (name == "enum-boruvka")
    return detail::timed_stream(
        [&](EmissionSink& s) { enumerate_mst_degree_sorted(g, boruvka_blackbox(), s); });
  if (name == "enum-prim-unsorted")
    return detail::timed_stream(
        [&](EmissionSink& s) { enumerate_mst(g, prim_blackbox(), s); });
  if (name == "enum-kruskal-unsorted")
    return detail::timed_stream(
        [&](EmissionSink& s) { enumerate_mst(g, kruskal_blackbox(), s); });
  if (name == "enum-boruvka-unsorted")
    return detail::timed_stream(
        [&](EmissionSink& s) { enumerate_mst(g, boruvka_blackbox(), s); });
  if (name == "incremental-prim")
    return detail::timed_stream([&](EmissionSink& s) { incremental_prim(g, s); });
  if (name == "total-prim")
    return detail::timed_bulk([&] { return tree_edges_undirected(prim(g)); });
  if (name == "total-kruskal")
    return detail::timed_bulk([&] { return kruskal(g); });
  if (name == "total-boruvka")
    return detail::timed_bulk([&] { return boruvka(g); });
  if (name == "dst-rooted") {
    RunOutcome out =
        detail::timed_stream([&](EmissionSink& s) { enumerate_dst_rooted(g, root, s); });
    out.root = root;
    return out;
  }
  if (name == "dst-unrooted") {
    std::optional<VertexId> chosen;
    RunOutcome out = detail::timed_bulk([&] {
      auto [r, tree] = dst_unrooted(g);
      chosen = r;
      return tree_edges_directed(tree);
    });
    out.root = chosen;
    return out;
  }
  throw std::invalid_argument("unknown algorithm: " + name);
}

// Full protocol: seeded connected weighted G(n, p) instances per size, every
// algorithm timed on the same instances, first run per instance discarded as
// warm-up when at least 3 runs are configured, per-size samples pooled over
// instances and runs. One CSV per algorithm lands in the output directory
// (SPANTREE_OUT_DIR overrides the configured one). Every run is validated
// outside the timed region; a failed validation aborts the benchmark. If
// emit_edges_path is nonempty, the first run's edges for every algorithm,
// size, and instance are appended there in a deterministic format.
inline void run_benchmark(const BenchConfig& cfg, const std::string& emit_edges_path = "") {
  namespace fs = std::filesystem;

  if (cfg.sizes.empty()) throw std::invalid_argument("benchmark needs sizes");
  if (cfg.algorithms.empty()) throw std::invalid_argument("benchmark needs algorithms");
  if (cfg.instances_per_size == 0 || cfg.runs_per_instance == 0)
    throw std::invalid_argument("benchmark needs positive instance and run counts");
  const auto& known = benchmark_algorithm_names();
  for (const std::string& name : cfg.algorithms) {
    if (is_directed_algorithm(name))
      throw std::invalid_argument("algorithm " + name +
                                  " runs on digraphs and cannot be benchmarked here");
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::invalid_argument("unknown algorithm: " + name);
  }

  std::string out_dir = cfg.output_dir;
  if (const char* forced = std::getenv("SPANTREE_OUT_DIR")) out_dir = forced;
  if (out_dir.empty()) out_dir = ".";
  fs::create_directories(out_dir);

  std::ofstream emit;
  if (!emit_edges_path.empty()) {
    emit.open(emit_edges_path, std::ios::trunc);
    if (!emit) throw std::runtime_error("cannot open edge dump file: " + emit_edges_path);
  }

  struct SampleSet {
    std::vector<std::uint64_t> first, inc, total;
  };
  std::vector<std::vector<SampleSet>> samples(
      cfg.algorithms.size(), std::vector<SampleSet>(cfg.sizes.size()));

  bool wants_unweighted = std::find(cfg.algorithms.begin(), cfg.algorithms.end(),
                                    "enum-st") != cfg.algorithms.end();

  for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
    std::size_t n = cfg.sizes[si];
    double p = edge_probability(cfg, n);
    for (std::size_t inst = 0; inst < cfg.instances_per_size; ++inst) {
      Graph g = gnp_random(n, p, detail::mix_seed(cfg.seed, n, inst), true, 1,
                           1000000000);
      std::optional<Graph> unweighted;
      if (wants_unweighted) unweighted.emplace(strip_weights(g));
      for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
        const std::string& name = cfg.algorithms[ai];
        const Graph& input = name == "enum-st" ? *unweighted : g;
        for (std::size_t run = 0; run < cfg.runs_per_instance; ++run) {
          RunOutcome out = run_algorithm(name, input);
          TreeCheckReport rep = check_spanning_tree(input, out.edges);
          if (!rep.is_spanning_tree)
            throw std::runtime_error("benchmark aborted: " + name + " on size " +
                                     std::to_string(n) + " instance " +
                                     std::to_string(inst) +
                                     " produced an invalid tree: " + rep.failure_reason);
          if (run == 0 && emit.is_open()) {
            emit << "# algorithm=" << name << " size=" << n << " instance=" << inst
                 << "\n";
            for (const auto& e : out.edges) emit << e.u << ' ' << e.v << "\n";
          }
          bool warm_up = cfg.runs_per_instance >= 3 && run == 0;
          if (warm_up) continue;
          samples[ai][si].first.push_back(out.metrics.first_output_ns);
          samples[ai][si].inc.push_back(out.metrics.max_incremental_delay_ns);
          samples[ai][si].total.push_back(out.metrics.total_time_ns);
        }
      }
    }
  }

  if (emit.is_open()) {
    emit.flush();
    if (!emit) throw std::runtime_error("failed writing edge dump: " + emit_edges_path);
  }

  auto average = [](const std::vector<std::uint64_t>& v) {
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    return static_cast<std::uint64_t>(std::llround(mean));
  };

  std::string label = probability_label(cfg);
  for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
    fs::path file =
        fs::path(out_dir) / ("aggregated_" + label + "." + cfg.algorithms[ai] + ".csv");
    std::ofstream csv(file);
    if (!csv) throw std::runtime_error("cannot open output file: " + file.string());
    csv << "size,first_output_avg,first_output_lower_quartile,first_output_upper_quartile,"
           "delay_inc_max_avg,delay_inc_max_lower_quartile,delay_inc_max_upper_quartile,"
           "total_time_avg,total_time_lower_quartile,total_time_upper_quartile\n";
    for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
      const SampleSet& s = samples[ai][si];
      auto [f_lo, f_hi] = quartiles(s.first);
      auto [i_lo, i_hi] = quartiles(s.inc);
      auto [t_lo, t_hi] = quartiles(s.total);
      csv << cfg.sizes[si] << ',' << average(s.first) << ',' << f_lo << ',' << f_hi
          << ',' << average(s.inc) << ',' << i_lo << ',' << i_hi << ','
          << average(s.total) << ',' << t_lo << ',' << t_hi << "\n";
    }
    if (!csv) throw std::runtime_error("failed writing output file: " + file.string());
  }
}

}  // namespace spantree
