#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "spantree/graph.hpp"

#ifndef SPANTREE_CLI_PATH
#error "SPANTREE_CLI_PATH must point at the built binary"
#endif

namespace spantree {
namespace {

namespace fs = std::filesystem;

class CliFixture : public ::testing::Test {
 protected:
  void SetUp() override {
    static int counter = 0;
    dir_ = fs::temp_directory_path() /
           ("spantree_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  void TearDown() override {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  // returns the exit code; captures combined output into out_
  int run_cli(const std::string& args) {
    fs::path log = dir_ / "cli_output.txt";
    std::string cmd = std::string(SPANTREE_CLI_PATH) + " " + args + " > " +
                      log.string() + " 2>&1";
    int raw = std::system(cmd.c_str());
    std::ifstream in(log);
    out_.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  fs::path file(const std::string& name) const { return dir_ / name; }

  void write_path3() {
    Graph g(3, false, false);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    save_graph(g, file("path3.txt").string());
  }

  void write_directed_path3() {
    Graph g(3, true, false);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    save_graph(g, file("dpath3.txt").string());
  }

  fs::path dir_;
  std::string out_;
};

TEST_F(CliFixture, GenGnpWeightedRoundTrip) {
  int code = run_cli("gen --family gnp --n 30 --p 0.3 --seed 5 --weighted --out " +
                     file("g.txt").string());
  ASSERT_EQ(code, 0) << out_;
  Graph g = load_graph(file("g.txt").string());
  EXPECT_EQ(g.vertex_count(), 30u);
  EXPECT_TRUE(g.weighted());
  EXPECT_TRUE(is_connected(g));
}

TEST_F(CliFixture, GenGnpDefaultsToUnweighted) {
  int code =
      run_cli("gen --family gnp --n 10 --p 0.5 --seed 1 --out " + file("u.txt").string());
  ASSERT_EQ(code, 0) << out_;
  Graph g = load_graph(file("u.txt").string());
  EXPECT_FALSE(g.weighted());
}

TEST_F(CliFixture, GenAdversarialFamilies) {
  ASSERT_EQ(run_cli("gen --family two-cliques-bridge --n 8 --out " +
                    file("tcb.txt").string()),
            0)
      << out_;
  Graph tcb = load_graph(file("tcb.txt").string());
  EXPECT_EQ(tcb.vertex_count(), 8u);
  EXPECT_EQ(tcb.edge_count(), 12u);

  ASSERT_EQ(run_cli("gen --family clique-plus-path --n 10 --k 4 --out " +
                    file("cpp.txt").string()),
            0)
      << out_;
  Graph cpp = load_graph(file("cpp.txt").string());
  EXPECT_EQ(cpp.edge_count(), 15u);
  EXPECT_TRUE(cpp.weighted());

  ASSERT_EQ(run_cli("gen --family weighted-bidirected-clique --n 6 --out " +
                    file("wbc.txt").string()),
            0)
      << out_;
  Graph wbc = load_graph(file("wbc.txt").string());
  EXPECT_TRUE(wbc.directed());
  EXPECT_EQ(wbc.edge_count(), 30u);
}

TEST_F(CliFixture, GenRejectsUnknownFamily) {
  EXPECT_EQ(run_cli("gen --family klein-bottle --n 8 --out " + file("x.txt").string()),
            2);
}

TEST_F(CliFixture, RunEnumStOnPathFixture) {
  write_path3();
  int code = run_cli("run --algo enum-st --graph " + file("path3.txt").string());
  ASSERT_EQ(code, 0) << out_;
  EXPECT_NE(out_.find("emitted 2 edges"), std::string::npos) << out_;
  EXPECT_NE(out_.find("PASS"), std::string::npos) << out_;
  EXPECT_NE(out_.find("total_time_ns"), std::string::npos) << out_;
}

TEST_F(CliFixture, RunEmitTreeThenCheckPasses) {
  write_path3();
  ASSERT_EQ(run_cli("run --algo enum-st --graph " + file("path3.txt").string() +
                    " --emit-tree " + file("tree.txt").string()),
            0)
      << out_;
  int code = run_cli("check --graph " + file("path3.txt").string() + " --tree " +
                     file("tree.txt").string());
  EXPECT_EQ(code, 0) << out_;
  EXPECT_NE(out_.find("PASS"), std::string::npos);
}

TEST_F(CliFixture, CheckTamperedTreeFails) {
  write_path3();
  {
    std::ofstream t(file("dup.txt"));
    t << "0 1\n0 1\n";
  }
  int code = run_cli("check --graph " + file("path3.txt").string() + " --tree " +
                     file("dup.txt").string());
  EXPECT_NE(code, 0);
  EXPECT_NE(out_.find("cycle"), std::string::npos) << out_;
  {
    std::ofstream t(file("short.txt"));
    t << "0 1\n";
  }
  code = run_cli("check --graph " + file("path3.txt").string() + " --tree " +
                 file("short.txt").string());
  EXPECT_NE(code, 0);
  EXPECT_NE(out_.find("count"), std::string::npos) << out_;
}

TEST_F(CliFixture, UnknownFlagsAndSubcommandsExitTwo) {
  write_path3();
  EXPECT_EQ(run_cli("run --algo enum-st --graph " + file("path3.txt").string() +
                    " --bogus"),
            2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli(""), 2);
}

TEST_F(CliFixture, RunMissingGraphExitsOne) {
  EXPECT_EQ(run_cli("run --algo enum-st --graph " + file("absent.txt").string()), 1);
}

TEST_F(CliFixture, DstRootedRunRespectsRootFlag) {
  write_directed_path3();
  int code =
      run_cli("run --algo dst-rooted --graph " + file("dpath3.txt").string() + " --root 0");
  ASSERT_EQ(code, 0) << out_;
  EXPECT_NE(out_.find("PASS"), std::string::npos);
  // vertex 0 cannot be reached from 2, so rooting there must fail loudly
  EXPECT_EQ(run_cli("run --algo dst-rooted --graph " + file("dpath3.txt").string() +
                    " --root 2"),
            1);
}

TEST_F(CliFixture, DstUnrootedReportsChosenRoot) {
  write_directed_path3();
  int code = run_cli("run --algo dst-unrooted --graph " + file("dpath3.txt").string());
  ASSERT_EQ(code, 0) << out_;
  EXPECT_NE(out_.find("root"), std::string::npos);
}

TEST_F(CliFixture, BenchMicroConfigWritesCsv) {
  {
    std::ofstream cfg(file("bench.cfg"));
    cfg << "sizes = 10,12\n"
        << "p = 0.5\n"
        << "instances_per_size = 1\n"
        << "runs_per_instance = 1\n"
        << "algorithms = total-kruskal\n"
        << "seed = 5\n"
        << "output_dir = " << dir_.string() << "\n";
  }
  ASSERT_EQ(run_cli("bench --config " + file("bench.cfg").string()), 0) << out_;
  fs::path csv = file("aggregated_0.5.total-kruskal.csv");
  ASSERT_TRUE(fs::exists(csv));
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "size,first_output_avg,first_output_lower_quartile,first_output_upper_"
            "quartile,delay_inc_max_avg,delay_inc_max_lower_quartile,delay_inc_max_"
            "upper_quartile,total_time_avg,total_time_lower_quartile,total_time_upper_"
            "quartile");
}

TEST_F(CliFixture, BenchOutDirFlagOverridesConfig) {
  fs::path forced = dir_ / "forced";
  fs::create_directories(forced);
  {
    std::ofstream cfg(file("bench.cfg"));
    cfg << "sizes = 8\np = 0.5\ninstances_per_size = 1\nruns_per_instance = 1\n"
        << "algorithms = total-prim\nseed = 3\noutput_dir = " << dir_.string() << "\n";
  }
  ASSERT_EQ(run_cli("bench --config " + file("bench.cfg").string() + " --out-dir " +
                    forced.string()),
            0)
      << out_;
  EXPECT_TRUE(fs::exists(forced / "aggregated_0.5.total-prim.csv"));
  EXPECT_FALSE(fs::exists(file("aggregated_0.5.total-prim.csv")));
}

}  // namespace
}  // namespace spantree
