#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ccas/cli.hpp"
#include "support/testing.hpp"

namespace ccas::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ccas_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string edge_text(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << g.external_id(u) << ' ' << g.external_id(v) << '\n';
  return out.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ccas");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CountCompleteGraph) {
  TempDir dir;
  std::string k5 = dir.write("k5.txt", edge_text(testing::complete_graph(5)));
  Outcome o = invoke({"count", "--input", k5, "--k", "3"});
  ASSERT_EQ(o.code, kOk) << o.err;
  Json j = o.json();
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["total"], 10);
  for (const auto& [id, count] : j["per_vertex"].items()) EXPECT_EQ(count, 6) << id;
  EXPECT_EQ(j["delta"], 6);
  EXPECT_EQ(j["core_reduced_n"], 5);
}

TEST(Cli, CountKeepsExternalIdsAndPeeledVertices) {
  TempDir dir;
  std::string f = dir.write("g.txt", "# comment\n7 8\n8 9\n9 7\n9 100\n");
  Json j = invoke({"count", "--input", f}).json();
  EXPECT_EQ(j["total"], 1);
  EXPECT_EQ(j["per_vertex"]["7"], 1);
  EXPECT_EQ(j["per_vertex"]["100"], 0);
  EXPECT_EQ(j["core_reduced_n"], 3);
}

TEST(Cli, CountStarHasNoTriangles) {
  TempDir dir;
  std::string f = dir.write("star.txt", edge_text(testing::star_graph(6)));
  Outcome o = invoke({"count", "--input", f});
  ASSERT_EQ(o.code, kOk);
  EXPECT_EQ(o.json()["total"], 0);
}

TEST(Cli, DumpSct) {
  TempDir dir;
  std::string f = dir.write("t.txt", "7 8\n8 9\n9 7\n");
  std::string dump = dir.file("dump.txt");
  ASSERT_EQ(invoke({"count", "--input", f, "--dump-sct", dump}).code, kOk);
  std::ifstream in(dump);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "# sct-dump v1 k=3 nodes=4\n1,7,pivot\n2,8,pivot\n3,9,pivot\n");
}

TEST(Cli, InputErrors) {
  TempDir dir;
  Outcome empty = invoke({"count", "--input", dir.write("e.txt", "# nothing\n\n")});
  EXPECT_EQ(empty.code, kInput);
  EXPECT_NE(empty.err.find("empty input"), std::string::npos);

  Outcome bad = invoke({"count", "--input", dir.write("b.txt", "1 2\n3 x\n")});
  EXPECT_EQ(bad.code, kInput);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;

  EXPECT_EQ(invoke({"count", "--input", dir.file("missing.txt")}).code, kInput);
}

TEST(Cli, UsageErrors) {
  TempDir dir;
  std::string f = dir.write("k3.txt", "0 1\n1 2\n2 0\n");
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"count"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate", "--input", f}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--input", f, "--k", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"densest", "--input", f, "--variant", "fast"}).code, kUsage);
  EXPECT_EQ(invoke({"densest", "--input", f, "--order", "sideways"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, OverflowIsReported) {
  TempDir dir;
  std::string f = dir.write("k200.txt", edge_text(testing::complete_graph(200)));
  Outcome o = invoke({"count", "--input", f, "--k", "64"});
  EXPECT_EQ(o.code, kOverflow);
  EXPECT_NE(o.err.find("binomial"), std::string::npos) << o.err;
}

TEST(Cli, DensestCompleteGraph) {
  TempDir dir;
  std::string f = dir.write("k5.txt", edge_text(testing::complete_graph(5)));
  Outcome o = invoke({"densest", "--input", f, "--k", "3", "--iters", "10"});
  ASSERT_EQ(o.code, kOk) << o.err;
  Json j = o.json();
  EXPECT_DOUBLE_EQ(j["density"].get<double>(), 2.0);
  EXPECT_EQ(j["clique_count"], 10);
  EXPECT_EQ(j["vertices"], Json({0, 1, 2, 3, 4}));
  EXPECT_EQ(j["T"], 10);
  EXPECT_EQ(j["variant"], "ccas");
  EXPECT_EQ(j["ordering"], "depth");
  EXPECT_NEAR(j["weight_sum"].get<double>(), 10.0, 1e-9);
  EXPECT_EQ(j["per_iteration_ms"].size(), 10u);
  EXPECT_NE(j["bound_report"].get<std::string>().find("Omega"), std::string::npos);
}

TEST(Cli, DensestZeroIterations) {
  TempDir dir;
  std::string f = dir.write("k5.txt", edge_text(testing::complete_graph(5)));
  Outcome o = invoke({"densest", "--input", f, "--iters", "0"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_DOUBLE_EQ(o.json()["density"].get<double>(), 2.0);
  EXPECT_TRUE(o.json()["per_iteration_ms"].empty());
}

TEST(Cli, DensestIsDeterministic) {
  TempDir dir;
  testing::Planted planted = testing::planted_clique(40, 0.15, 7, 3);
  std::string f = dir.write("p.txt", edge_text(planted.graph));
  for (const char* order : {"build", "random", "depth", "degeneracy"}) {
    for (const char* variant : {"basic", "ccas"}) {
      std::vector<std::string> args{"densest", "--input", f,       "--k",  "4",
                                    "--iters", "50",     "--order", order, "--variant",
                                    variant,   "--seed", "9"};
      Json a = invoke(args).json();
      Json b = invoke(args).json();
      a.erase("per_iteration_ms");
      b.erase("per_iteration_ms");
      EXPECT_EQ(a.dump(), b.dump()) << order << " " << variant;
    }
  }
}

TEST(Cli, OracleAndRefusal) {
  TempDir dir;
  std::string two = dir.write("two.txt", "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
  Outcome o = invoke({"oracle", "--input", two});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(o.json()["vertices"], Json({0, 1, 2}));
  EXPECT_EQ(o.json()["source"], "oracle");

  std::string big = dir.write("k17.txt", edge_text(testing::complete_graph(17)));
  Outcome refused = invoke({"oracle", "--input", big});
  EXPECT_EQ(refused.code, kOracleSize);
  EXPECT_NE(refused.err.find("16"), std::string::npos);
}

TEST(Cli, BenchCompleteGraph) {
  TempDir dir;
  std::string f = dir.write("k5.txt", edge_text(testing::complete_graph(5)));
  Outcome o = invoke({"bench", "--input", f, "--iters", "20"});
  ASSERT_EQ(o.code, kOk) << o.err;
  Json runs = o.json();
  ASSERT_EQ(runs.size(), 8u);
  for (const auto& entry : runs) {
    EXPECT_EQ(entry["trace"].front()["t"], 1);
    EXPECT_EQ(entry["trace"].back()["t"], 20);
    for (const auto& point : entry["trace"]) {
      EXPECT_DOUBLE_EQ(point["density"].get<double>(), 2.0);
    }
  }
}

TEST(Cli, BenchPlantedCliqueReachesTheOptimum) {
  TempDir dir;
  testing::Planted planted = testing::planted_clique(20, 0.1, 6, 11);
  std::string f = dir.write("p.txt", edge_text(planted.graph));
  double exact = invoke({"oracle", "--input", f, "--k", "4"}).json()["density"];
  Json runs = invoke({"bench", "--input", f, "--k", "4", "--iters", "500"}).json();
  for (const auto& entry : runs) {
    double final_density = entry["trace"].back()["density"];
    EXPECT_GE(final_density, 0.98 * exact) << entry["variant"] << entry["ordering"];
    EXPECT_LE(final_density, exact + 1e-12);
  }
}

TEST(Cli, TextFormat) {
  TempDir dir;
  std::string f = dir.write("k3.txt", "0 1\n1 2\n2 0\n");
  Outcome o = invoke({"count", "--input", f, "--format", "text"});
  ASSERT_EQ(o.code, kOk);
  EXPECT_NE(o.out.find("total: 1\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("per_vertex.0: 1\n"), std::string::npos) << o.out;
}

TEST(CliBinary, RunsAsAProcess) {
  TempDir dir;
  std::string f = dir.write("k4.txt", edge_text(testing::complete_graph(4)));
  std::string out = dir.file("out.json");
  std::string cmd = std::string(CCAS_CLI_BINARY) + " count --input " + f +
                    " --k 3 > " + out + " 2>/dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(out);
  Json j = Json::parse(in);
  EXPECT_EQ(j["total"], 4);

  std::string bad = std::string(CCAS_CLI_BINARY) + " oracle --input " +
                    dir.file("missing.txt") + " > /dev/null 2>&1";
  int status = std::system(bad.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kInput);
}

}  // namespace
}  // namespace ccas::cli
