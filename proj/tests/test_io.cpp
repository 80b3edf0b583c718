#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

namespace srg {
namespace {

using namespace test;
using io::json;

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const io::DocumentError& e) {
    return e.what();
  }
  return "";
}

TEST(Document, CommentsAllowed) {
  json j = io::parse_document("// note\n{\"a\": /* inline */ 1}");
  EXPECT_EQ(j["a"], 1);
}

TEST(Document, ParseErrorHasPosition) {
  std::string msg = error_of([] { io::parse_document("{\n  \"a\": 1,\n  \"b\" 2\n}", "spec.json"); });
  EXPECT_EQ(msg.rfind("spec.json:3:", 0), 0u) << msg;
}

TEST(Document, MissingFile) { EXPECT_THROW(io::read_document("/nonexistent/x.json"), io::DocumentError); }

TEST(GraphJson, RoundTrip) {
  for (const SimpleGraph& g : {cycle5(), pentagon_chords(), hub7(), wheel(), SimpleGraph()})
    EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
}

TEST(GraphJson, FieldPathErrors) {
  json bad = json::parse(R"({"vertices": ["a", "b"], "edges": [{"label": "e1", "endpoints": ["a", "c"]}]})");
  EXPECT_NE(error_of([&] { io::graph_from_json(bad); }).find("graph.edges[0].endpoints"), std::string::npos);
  json loop = json::parse(R"({"vertices": ["a"], "edges": [{"label": "e1", "endpoints": ["a", "a"]}]})");
  EXPECT_NE(error_of([&] { io::graph_from_json(loop); }).find("loops"), std::string::npos);
  json dup = json::parse(R"({"vertices": ["a", "a"]})");
  EXPECT_NE(error_of([&] { io::graph_from_json(dup); }).find("graph.vertices[1]"), std::string::npos);
  json missing = json::parse(R"({"edges": []})");
  EXPECT_NE(error_of([&] { io::graph_from_json(missing); }).find("graph.vertices"), std::string::npos);
}

TEST(RelationJson, RoundTripAndErrors) {
  RelationSpec rel{RelationKind::explicit_table, {{"p", {"a"}}}};
  EXPECT_EQ(io::relation_from_json(io::to_json(rel)), rel);
  EXPECT_EQ(io::relation_from_json(io::to_json(diameter())), diameter());
  EXPECT_THROW(io::relation_from_json(json::parse(R"({"kind": "explicit"})")), io::DocumentError);
  EXPECT_THROW(io::relation_from_json(json::parse(R"({"kind": "open-neighborhood", "table": {}})")),
               io::DocumentError);
  EXPECT_THROW(io::relation_from_json(json::parse(R"({"kind": "nearby"})")), io::DocumentError);
}

TEST(RunSpec, Fixtures) {
  io::RunSpec s = load_fixture("pentagon_chords.json");
  EXPECT_EQ(*s.graph, pentagon_chords());
  EXPECT_EQ(s.params, (ParameterSet{"v1", "v3"}));
  EXPECT_EQ(s.target, (VertexSet{"v1", "v2", "v5"}));
  EXPECT_FALSE(s.second);

  io::RunSpec w = load_fixture("wheel_pair.json");
  ASSERT_TRUE(w.second);
  EXPECT_EQ(w.second->graph, w.graph);
  EXPECT_EQ(w.second->params, (ParameterSet{"v3", "v4"}));

  io::RunSpec p = load_fixture("paths_product.json");
  ASSERT_TRUE(p.second);
  EXPECT_EQ(p.second->relation.kind, RelationKind::closed_neighborhood);
  EXPECT_EQ(p.second->graph->order(), 4u);
}

TEST(RunSpec, ParametersInsideRelation) {
  json j = json::parse(R"({"graph": {"vertices": ["a", "b"], "edges": [{"label": "e", "endpoints": ["a", "b"]}]},
                           "relation": {"kind": "open-neighborhood", "parameters": ["a"]}, "target": ["b"]})");
  EXPECT_EQ(io::run_spec_from_json(j).params, (ParameterSet{"a"}));
  j["parameters"] = json::array({"b"});
  EXPECT_THROW(io::run_spec_from_json(j), io::DocumentError);
}

TEST(RunSpec, Errors) {
  json j = json::parse(R"({"graph": {"vertices": ["a", "b"]}, "relation": {"kind": "open-neighborhood"},
                           "parameters": ["a"], "target": ["z"]})");
  EXPECT_NE(error_of([&] { io::run_spec_from_json(j); }).find("target"), std::string::npos);
  j["target"] = json::array({"b"});
  j["parameters"] = json::array({"q"});
  EXPECT_NE(error_of([&] { io::run_spec_from_json(j); }).find("parameters"), std::string::npos);
  j.erase("parameters");
  EXPECT_THROW(io::run_spec_from_json(j), io::DocumentError);
}

TEST(SoftRoughGraphJson, RoundTripOnFixtures) {
  for (const auto& name : fixture_names()) {
    io::RunSpec spec = load_fixture(name);
    SoftRoughGraph s = io::build(spec);
    json j = io::to_json(s);
    SoftRoughGraph back = io::soft_rough_graph_from_json(j);
    EXPECT_EQ(back, s) << name;
    EXPECT_EQ(io::dump(io::to_json(back)), io::dump(j)) << name;
    EXPECT_EQ(io::soft_rough_graph_from_json(io::parse_document(io::dump(j))), s) << name;
  }
}

TEST(SoftRoughGraphJson, TamperedDocumentRejected) {
  json j = io::to_json(io::build(load_fixture("cycle5_diameter.json")));
  j["vertexApproximation"]["lower"] = json::array({"v3"});
  EXPECT_NE(error_of([&] { io::soft_rough_graph_from_json(j); }).find("vertexApproximation"), std::string::npos);
}

TEST(SoftRoughGraphJson, GoldenFields) {
  json j = io::to_json(io::build(load_fixture("pentagon_chords.json")));
  EXPECT_EQ(j["vertexApproximation"]["lower"], json::array({"v2", "v5"}));
  EXPECT_EQ(j["edgeApproximation"]["upper"], json::array({"e4", "e6", "e8"}));
  EXPECT_EQ(j["vertexApproximation"]["definable"], false);
}

TEST(CensusJson, Config) {
  json j = io::read_document(fixture("census_cycle5.json"));
  CensusConfig cfg = io::census_config_from_json(j);
  EXPECT_EQ(*cfg.host, cycle5());
  EXPECT_EQ(cfg.checks, default_checks());
  j["checks"] = json::array({"oracle_agreement", "bogus"});
  EXPECT_NE(error_of([&] { io::census_config_from_json(j); }).find("checks[1]"), std::string::npos);
  j["checks"] = json::array({"oracle_agreement"});
  j["maxParams"] = -1;
  EXPECT_THROW(io::census_config_from_json(j), io::DocumentError);
}

TEST(CensusJson, Report) {
  CensusConfig cfg = io::census_config_from_json(io::read_document(fixture("census_cycle5.json")));
  json r = io::to_json(run_census(cfg));
  EXPECT_EQ(r["instanceCount"], 961);
  EXPECT_EQ(r["passed"], true);
  EXPECT_EQ(r["checks"]["oracle_agreement"]["failures"], 0);
}

TEST(Dot, Clusters) {
  std::string dot = io::to_dot(io::build(load_fixture("cycle5_diameter.json")));
  EXPECT_NE(dot.find("cluster_lower"), std::string::npos);
  EXPECT_NE(dot.find("cluster_upper"), std::string::npos);
  EXPECT_NE(dot.find("\"lower:v3\" -- \"lower:v4\" [label=\"e3\"]"), std::string::npos);
}

}  // namespace
}  // namespace srg
