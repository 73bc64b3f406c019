#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rainbow/cli.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph_io.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rainbow");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("rainbow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string graph_file(const std::string& name, const Graph& g) {
    std::string path = (dir / name).string();
    std::ofstream f(path);
    write_edge_list(f, g);
    return path;
  }
  std::string text_file(const std::string& name, const std::string& body) {
    std::string path = (dir / name).string();
    std::ofstream(path) << body;
    return path;
  }
  static std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), {}};
  }
};

}  // namespace

TEST_F(CliTest, Analyze) {
  auto r = run({"analyze", graph_file("pet.txt", gen::petersen()), "--format", "structured"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["input"]["classification"], "TwoConnected");
  EXPECT_EQ(j["input"]["srg"]["mu"], 1);
  EXPECT_EQ(j["outcome"]["srg_guarantee"], 5);

  auto s = run({"analyze", graph_file("star.txt", gen::star(4)), "--format", "structured"}).json();
  EXPECT_EQ(s["input"]["classification"], "BridgedCutVertex");
  EXPECT_EQ(s["outcome"]["bridge_count"], 4);
  EXPECT_TRUE(s["outcome"]["srg_guarantee"].is_null());

  EXPECT_EQ(run({"analyze", text_file("bad.txt", "0 1\nzero one\n")}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", (dir / "missing.txt").string()}).code, cli::kInputError);
}

TEST_F(CliTest, ColorThenVerify) {
  std::string c5 = graph_file("c5.txt", gen::cycle(5));
  std::string col = (dir / "c5.col").string();
  auto r = run({"color", c5, "--out", col, "--format", "structured"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_LE(r.json()["outcome"]["colors_used"].get<int>(), 5);
  EXPECT_EQ(run({"verify", c5, col}).code, cli::kOk);

  auto t = run({"color", graph_file("t.txt", gen::tight_example(1, 2)), "--format", "structured"}).json();
  EXPECT_EQ(t["outcome"]["colors_used"], 3);
  EXPECT_EQ(t["outcome"]["coloring"].size(), 7u);

  EXPECT_EQ(run({"color", graph_file("c7.txt", gen::cycle(7))}).code, cli::kInputError);
}

TEST_F(CliTest, ColorFlags) {
  std::string pet = graph_file("pet.txt", gen::petersen());
  auto r = run({"color", pet, "--center", "3", "--witnesses", "--format", "structured"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.json()["outcome"]["witnesses"].size(), 45u);
  EXPECT_EQ(run({"color", pet, "--all-centers"}).code, cli::kOk);
  EXPECT_EQ(run({"color", pet, "--center", "11"}).code, cli::kInputError);
}

TEST_F(CliTest, Verify) {
  std::string c4 = graph_file("c4.txt", gen::cycle(4));
  // Edges are 0-1, 0-3, 1-2, 2-3.
  EXPECT_EQ(run({"verify", c4, text_file("alt.col", "0 1 1\n1 2 2\n2 3 1\n0 3 2\n")}).code, cli::kOk);
  auto bad = run({"verify", c4, text_file("ones.col", "0 1 1\n1 2 1\n2 3 1\n0 3 1\n"), "--format", "structured"});
  EXPECT_EQ(bad.code, cli::kFailure);
  EXPECT_EQ(bad.json()["outcome"]["failing_pair"], nlohmann::json::array({0, 2}));
  EXPECT_EQ(run({"verify", c4, text_file("short.col", "0 1 1\n1 2 2\n2 3 1\n")}).code, cli::kInputError);
}

TEST_F(CliTest, Exact) {
  auto c6 = run({"exact", graph_file("c6.txt", gen::cycle(6)), "--format", "structured"});
  ASSERT_EQ(c6.code, cli::kOk) << c6.err;
  EXPECT_EQ(c6.json()["outcome"]["kind"], "Exact");
  EXPECT_EQ(c6.json()["outcome"]["value"], 3);
  auto k24 = run({"exact", graph_file("k24.txt", gen::complete_bipartite(2, 4)), "--format", "structured"}).json();
  EXPECT_EQ(k24["outcome"]["value"], 2);
  auto big = run({"exact", graph_file("pet.txt", gen::petersen()), "--budget", "5", "--format", "structured"});
  EXPECT_EQ(big.code, cli::kBudgetExhausted);
  EXPECT_EQ(big.json()["outcome"]["kind"], "Bounds");
}

TEST_F(CliTest, GenRoundTrip) {
  std::string out = (dir / "g.txt").string();
  ASSERT_EQ(run({"gen", "random", "--n", "12", "--p", "0.5", "--seed", "4", "--bridgeless", "--out", out}).code,
            cli::kOk);
  Graph g = read_edge_list_file(out);
  EXPECT_EQ(g.order(), 12u);
  EXPECT_NE(slurp(out).find("seed=4"), std::string::npos);
  auto r = run({"gen", "tight", "--k", "2", "--r", "3"});
  std::istringstream in(r.out);
  EXPECT_EQ(read_edge_list(in), gen::tight_example(2, 3));
  EXPECT_EQ(run({"gen", "tight", "--k", "1", "--r", "1"}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "nosuch"}).code, cli::kInputError);
}

TEST_F(CliTest, FuzzValidate) {
  auto r = run({"fuzz", "--n-min", "15", "--n-max", "15", "--bridgeless", "--count", "100", "--seed", "3", "--format",
                "structured"});
  ASSERT_EQ(r.code, cli::kOk) << r.out;
  auto o = r.json()["outcome"];
  EXPECT_EQ(o["verified"], 100);
  EXPECT_LE(o["max_colors"].get<int>(), 5);

  auto cyc = run({"fuzz", "--family", "cycle", "--n-min", "4", "--n-max", "7", "--count", "4", "--format",
                  "structured"});
  ASSERT_EQ(cyc.code, cli::kOk) << cyc.out;
  EXPECT_EQ(cyc.json()["outcome"]["verified"], 2);
  EXPECT_EQ(cyc.json()["outcome"]["out_of_scope"], 2);
}

TEST_F(CliTest, FuzzHunt) {
  std::string findings = (dir / "findings.txt").string();
  auto r = run({"fuzz", "--mode", "hunt-rc5", "--n-min", "5", "--n-max", "7", "--bridgeless", "--count", "30",
                "--findings", findings, "--format", "structured"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_LE(r.json()["outcome"]["max_exact_rc"].get<int>(), 4);
  EXPECT_TRUE(fs::exists(findings));
  EXPECT_EQ(fs::file_size(findings), 0u);
}

TEST_F(CliTest, Usage) {
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_EQ(run({"color"}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", "x", "--format", "yaml"}).code, cli::kInputError);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  std::string pet = graph_file("pet.txt", gen::petersen());
  auto strip = [](nlohmann::json j) {
    j.erase("timing_ms");
    return j;
  };
  auto a = run({"color", pet, "--format", "structured"}).json();
  auto b = run({"color", pet, "--format", "structured"}).json();
  EXPECT_EQ(strip(a), strip(b));
}
