#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "srg/census.hpp"
#include "srg/soft_rough_graph.hpp"

namespace srg::io {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input document. The message starts with the
/// source name and either a line:column position or a field path.
class DocumentError : public Error {
 public:
  using Error::Error;
};

/// Parses JSON text; `//` and `/* */` comments are allowed so fixture
/// documents can carry notes.
json parse_document(std::string_view text, std::string_view source = "<input>");
json read_document(const std::string& path);

// Graph interchange format:
//   {"vertices": ["v1", ...], "edges": [{"label": "e1", "endpoints": ["v1", "v2"]}, ...]}
json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j, const std::string& path = "graph");

// Relation: {"kind": "open-neighborhood" | ..., "parameters": [...], "table": {"p": ["v", ...]}}
json to_json(const RelationSpec& rel);
RelationSpec relation_from_json(const json& j, const std::string& path = "relation");

/// Input of one soft rough graph computation.
struct RunSpec {
  GraphPtr graph;
  RelationSpec relation;
  ParameterSet params;
  VertexSet target;
  std::shared_ptr<const RunSpec> second;  // optional second operand
};

/// `{"graph": ..., "relation": ..., "parameters": [...]?, "target": [...], "second": {...}?}`.
/// Parameters may sit either at top level or inside the relation. A second
/// operand without its own graph reuses the first one's.
RunSpec run_spec_from_json(const json& j, GraphPtr inherited_graph = nullptr, const std::string& path = "");

SoftRoughGraph build(const RunSpec& spec);

json to_json(const SoftRoughGraph& srg);
/// Rebuilds the soft rough graph from its provenance and checks every stored
/// set against the rebuilt one.
SoftRoughGraph soft_rough_graph_from_json(const json& j, const std::string& path = "");

json to_json(const InducedFlags& flags);
json to_json(const SubgraphReport& report);
json to_json(const CombineResult& result);
json to_json(const SoftRoughProduct& product);
json to_json(const CensusReport& report);

/// `{"graph": ..., "relation": {"kind": ...}, "maxParams": n?, "includeEmpty": b?,
///   "checks": [...]?, "vertexCap": n?}`
CensusConfig census_config_from_json(const json& j, const std::string& path = "");

/// H_* and H^* as two clusters of one undirected graph.
std::string to_dot(const SoftRoughGraph& srg);
/// Lower and upper product graphs as two clusters.
std::string to_dot(const SoftRoughProduct& product);

/// Stable text rendering used for all output: two-space indentation and a
/// trailing newline.
std::string dump(const json& j);

}  // namespace srg::io
