#include "gdom/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gdom_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "gdom");
    args.push_back("--log-dir");
    args.push_back((dir_ / "log").string());
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return gdom::cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::vector<nlohmann::json> records() {
    std::vector<nlohmann::json> out;
    std::ifstream in(dir_ / "log" / "runs.jsonl");
    std::string line;
    while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
    return out;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, AnalyzeCompleteGraph) {
  EXPECT_EQ(run({"analyze", "builtin:K4", "--json"}), 0);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["spanning_trees"], "16");
  EXPECT_EQ(j["transitive"], true);
}

TEST_F(Cli, AnalyzePathFromFile) {
  const auto path = write("p3.txt", "3; 0 1; 1 2\n");
  EXPECT_EQ(run({"analyze", path, "--json"}), 0);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["cut_edge"], true);
  EXPECT_EQ(j["spanning_trees"], "1");
}

TEST_F(Cli, AnalyzeReportsBoundErrorsPerField) {
  EXPECT_EQ(run({"analyze", "builtin:G6x6", "--json", "--tutte-bound", "10"}), gdom::cli::kExitInconclusive);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(j["tutte"].contains("error"));
  EXPECT_EQ(j["vertices"], 36);
}

TEST_F(Cli, BadFileGivesDiagnostic) {
  const auto path = write("bad.txt", "3; 0 1\n");
  EXPECT_NE(run({"analyze", path}), 0);
  EXPECT_NE(err_.str().find("disconnected"), std::string::npos);
  EXPECT_NE(run({"analyze", (dir_ / "missing.txt").string()}), 0);
}

TEST_F(Cli, Relate) {
  EXPECT_EQ(run({"relate", "builtin:K4", "builtin:K3", "--json"}), 0);
  auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["fractional_tiling"]["decision"], "holds");
  EXPECT_EQ(j["fractional_tiling"]["m"], "3");
  EXPECT_EQ(j["domination"]["decision"], "holds");
  run({"relate", "builtin:P3", "builtin:edge", "--json"});
  j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["domination"]["decision"], "holds");
  EXPECT_EQ(j["fractional_tiling"]["decision"], "fails");
  run({"relate", "builtin:K3", "builtin:K4", "--json"});
  j = nlohmann::json::parse(out_.str());
  for (const char* k : {"tiling", "fractional_tiling", "fractional_edge_tiling", "domination"}) EXPECT_EQ(j[k]["decision"], "fails");
}

TEST_F(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", "spanning_tree", "builtin:K4", "builtin:K3"}), 0);
  EXPECT_NE(out_.str().find("verdict: holds"), std::string::npos);
  EXPECT_EQ(run({"check", "vertex_counting:independent_sets", "builtin:S4", "builtin:edge"}), 1);
  EXPECT_EQ(run({"check", "frac_tiling_tree", "builtin:P3", "builtin:edge"}), 2);
  EXPECT_EQ(run({"check", "no_such_id", "builtin:P3"}), 3);
  EXPECT_EQ(run({"check", "koteljanskii_step", "builtin:P3", "--set-a", "0,1", "--set-b", "1,2", "--json"}), 2);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["raw_verdict"], "violated");
  EXPECT_EQ(j["lhs"]["exact"], "1");
  EXPECT_EQ(j["rhs"]["exact"], "2");
}

TEST_F(Cli, CheckAcceptsGridOptions) {
  EXPECT_EQ(run({"check", "tutte_pointwise", "builtin:C5", "builtin:P3", "--grid", "1,2", "--json"}), 0);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["grid"].size(), 4U);
  EXPECT_EQ(run({"check", "heat_trace_frac", "builtin:K4", "builtin:K3", "--t-grid", "1/2,1,2", "--json"}), 0);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["grid"].size(), 3U);
}

TEST_F(Cli, HuntTreeProductFindsNothing) {
  EXPECT_EQ(run({"hunt", "tree_product", "--trials", "100", "--seed", "5", "--json"}), 0);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["violations"], 0);
}

TEST_F(Cli, HuntArchivesHingeCounterexamples) {
  EXPECT_EQ(run({"hunt", "spectral_decreasing_convex", "--hinge", "4", "--trials", "1000", "--max-n", "10",
                 "--strategy", "overlay_copies"}),
            1);
  const auto dir = dir_ / "log" / "counterexamples";
  ASSERT_TRUE(fs::exists(dir));
  std::size_t bundles = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["report"]["verdict"], "violated");
    const auto g = gdom::graph_from_json(j["g"]);
    const auto h = gdom::graph_from_json(j["h"]);
    EXPECT_TRUE(gdom::verify_certificate(g, h, gdom::certificate_from_json(j["certificate"])));
    ++bundles;
  }
  EXPECT_GE(bundles, 1U);
}

TEST_F(Cli, SameSeedSamePayload) {
  run({"hunt", "vertex_counting", "--trials", "200", "--seed", "9", "--strategy", "random_connected_pair"});
  run({"hunt", "vertex_counting", "--trials", "200", "--seed", "9", "--strategy", "random_connected_pair"});
  const auto rs = records();
  ASSERT_EQ(rs.size(), 2U);
  EXPECT_EQ(rs[0]["payload"], rs[1]["payload"]);
  EXPECT_EQ(rs[0]["schema"], 1);
  EXPECT_EQ(rs[0]["seed"], 9);
}

TEST_F(Cli, EveryRunAppendsOneRecord) {
  const auto path = write("k3.txt", "3; 0 1; 1 2; 0 2\n");
  run({"analyze", path});
  run({"check", "spanning_tree", path, path});
  run({"check", "bogus", path});
  run({"report"});
  const auto rs = records();
  ASSERT_EQ(rs.size(), 4U);
  EXPECT_EQ(rs[0]["inputs"][0]["digest"], "fnv1a64:" + gdom::hex64(gdom::fnv1a64("3; 0 1; 1 2; 0 2\n")));
  EXPECT_EQ(rs[2]["exit"], 3);
  EXPECT_NE(out_.str().find("3 record(s)"), std::string::npos);
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(gdom::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(gdom::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
