#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "srg/cli.hpp"
#include "support.hpp"

namespace srg {
namespace {

using namespace test;
using io::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "srg-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, Approx) {
  CliRun r = run({"approx", fixture("cycle5_diameter.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["vertexApproximation"]["lower"], json::array({"v3", "v4"}));
  EXPECT_EQ(j["edgeApproximation"]["lower"], json::array({"e3"}));
  EXPECT_EQ(j["softSet"]["v1"], json::array({"v3", "v4"}));
}

TEST(Cli, BuildWithDot) {
  auto dot = scratch("pentagon.dot");
  CliRun r = run({"build", fixture("pentagon_chords.json"), "--dot", dot.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["edgeApproximation"]["upper"], json::array({"e4", "e6", "e8"}));
  EXPECT_NE(slurp(dot).find("cluster_upper"), std::string::npos);
}

TEST(Cli, BuildIsDeterministic) {
  for (const auto& name : fixture_names()) {
    CliRun a = run({"build", fixture(name)});
    CliRun b = run({"build", fixture(name)});
    ASSERT_EQ(a.code, 0) << name << a.err;
    EXPECT_EQ(a.out, b.out) << name;
  }
}

TEST(Cli, Classify) {
  CliRun r = run({"classify", fixture("cycle5_diameter.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["upperVertexInduced"], true);
}

TEST(Cli, CheckSubgraph) {
  CliRun r = run({"check-subgraph", fixture("hub7_child.json"), fixture("hub7_parent.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["containmentVerdict"], true);
  CliRun swapped = run({"check-subgraph", fixture("hub7_parent.json"), fixture("hub7_child.json")});
  EXPECT_EQ(json::parse(swapped.out)["verdict"], false);
}

TEST(Cli, Tree) {
  EXPECT_EQ(json::parse(run({"tree", fixture("cycle5_diameter.json")}).out)["softRoughTree"], true);
  EXPECT_EQ(json::parse(run({"tree", fixture("pentagon_chords.json")}).out)["softRoughTree"], false);
}

TEST(Cli, CombineUsesSecondBlock) {
  CliRun r = run({"combine", "--mode", "and", fixture("wheel_pair.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["lowerVertices"], json::array({"v5"}));
  EXPECT_EQ(j["lowerEdges"], json::array());
  EXPECT_EQ(j["upperEdges"], json::array({"e5", "e7"}));
  CliRun o = run({"combine", "--mode", "or", fixture("wheel_pair.json")});
  EXPECT_EQ(json::parse(o.out)["lowerEdges"], json::array({"e5", "e6", "e7", "e8"}));
}

TEST(Cli, CombineNeedsSecondOperand) {
  CliRun r = run({"combine", "--mode", "and", fixture("cycle5_diameter.json")});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("second"), std::string::npos);
  CliRun hosts = run({"combine", "--mode", "or", fixture("cycle5_diameter.json"), fixture("pentagon_chords.json")});
  EXPECT_EQ(hosts.code, cli::kExitInput);
}

TEST(Cli, Product) {
  auto dot = scratch("join.dot");
  CliRun r = run({"product", "--kind", "join", fixture("paths_product.json"), "--dot", dot.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["lowerGraph"]["vertices"].size(), 3u);
  EXPECT_EQ(j["lowerGraph"]["edges"].size(), 3u);
  EXPECT_EQ(j["lowerInHostProduct"], true);
  EXPECT_NE(slurp(dot).find("cluster_lower"), std::string::npos);
}

TEST(Cli, ProductKindValidated) {
  EXPECT_EQ(run({"product", "--kind", "tensor", fixture("paths_product.json")}).code, cli::kExitInput);
}

TEST(Cli, Census) {
  auto report = scratch("census.json");
  CliRun r = run({"census", fixture("census_cycle5.json"), "--report", report.string()});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_NE(r.out.find("RESULT: all checks passed"), std::string::npos);
  EXPECT_EQ(json::parse(slurp(report))["instanceCount"], 961);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(run({"build"}).code, cli::kExitInput);
  CliRun missing = run({"build", "/nonexistent/spec.json"});
  EXPECT_EQ(missing.code, cli::kExitInput);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  auto bad = scratch("bad.json");
  std::ofstream(bad) << "{\"graph\": {\"vertices\": [\"a\"]}, \"relation\": {\"kind\": \"open-neighborhood\"},\n"
                        " \"parameters\": [\"a\"], \"target\": []}";
  CliRun empty = run({"build", bad.string()});
  EXPECT_EQ(empty.code, cli::kExitInput);
  EXPECT_NE(empty.err.find("non-empty"), std::string::npos);
}

TEST(Cli, Help) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("census"), std::string::npos);
}

}  // namespace
}  // namespace srg
