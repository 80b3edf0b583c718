#include "srg/io.hpp"

#include <fstream>
#include <sstream>

namespace srg::io {

namespace {

std::string join_path(const std::string& base, std::string_view key) {
  return base.empty() ? std::string(key) : base + "." + std::string(key);
}

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw DocumentError((path.empty() ? std::string("document") : path) + ": " + message);
}

const json& require(const json& obj, std::string_view key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(join_path(path, key), "required field is missing");
  return *it;
}

const json* optional_field(const json& obj, std::string_view key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  std::string s = j.get<std::string>();
  if (s.empty()) fail(path, "labels must be non-empty");
  return s;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(require_string(j[i], index_path(path, i)));
  return out;
}

template <class Id>
std::set<Id> label_set(const json& j, const std::string& path) {
  std::set<Id> out;
  auto items = string_list(j, path);
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!out.insert(Id(items[i])).second) fail(index_path(path, i), "duplicate label '" + items[i] + "'");
  return out;
}

template <class Id>
json label_array(const std::set<Id>& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(x.str());
  return out;
}

std::size_t require_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

bool require_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot_cluster(std::ostringstream& os, const SimpleGraph& g, const std::string& name, const std::string& title) {
  os << "  subgraph " << dot_quote("cluster_" + name) << " {\n";
  os << "    label=" << dot_quote(title) << ";\n";
  for (const auto& v : g.vertices())
    os << "    " << dot_quote(name + ":" + v.str()) << " [label=" << dot_quote(v.str()) << "];\n";
  for (const auto& [label, ends] : g.edges())
    os << "    " << dot_quote(name + ":" + ends.low.str()) << " -- " << dot_quote(name + ":" + ends.high.str())
       << " [label=" << dot_quote(label.str()) << "];\n";
  os << "  }\n";
}

}  // namespace

json parse_document(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("; "); pos != std::string::npos) what = what.substr(pos + 2);
    throw DocumentError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                        ": malformed document: " + what);
  }
}

json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Graphs and relations

json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& [label, ends] : g.edges())
    edges.push_back(json{{"label", label.str()}, {"endpoints", json::array({ends.low.str(), ends.high.str()})}});
  return json{{"vertices", label_array(g.vertices())}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a graph object with 'vertices' and 'edges'");
  VertexSet vertices = label_set<VertexId>(require(j, "vertices", path), join_path(path, "vertices"));
  EdgeMap edges;
  const std::string edges_path = join_path(path, "edges");
  const json* edge_list = optional_field(j, "edges");
  if (edge_list) {
    if (!edge_list->is_array()) fail(edges_path, "expected an array of edge objects");
    for (std::size_t i = 0; i < edge_list->size(); ++i) {
      const std::string p = index_path(edges_path, i);
      const json& e = (*edge_list)[i];
      std::string label = require_string(require(e, "label", p), join_path(p, "label"));
      auto ends = string_list(require(e, "endpoints", p), join_path(p, "endpoints"));
      if (ends.size() != 2) fail(join_path(p, "endpoints"), "expected exactly two vertex labels");
      for (const auto& v : ends)
        if (!vertices.contains(VertexId(v))) fail(join_path(p, "endpoints"), "unknown vertex '" + v + "'");
      if (ends[0] == ends[1]) fail(join_path(p, "endpoints"), "loops are not allowed");
      if (!edges.emplace(EdgeId(label), Endpoints(ends[0], ends[1])).second)
        fail(join_path(p, "label"), "duplicate edge label '" + label + "'");
    }
  }
  try {
    return SimpleGraph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json to_json(const RelationSpec& rel) {
  json out{{"kind", std::string(to_string(rel.kind))}};
  if (rel.kind == RelationKind::explicit_table) {
    json table = json::object();
    for (const auto& [p, image] : rel.table) table[p.str()] = label_array(image);
    out["table"] = std::move(table);
  }
  return out;
}

RelationSpec relation_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a relation object");
  RelationSpec rel;
  const std::string kind_path = join_path(path, "kind");
  try {
    rel.kind = parse_relation_kind(require_string(require(j, "kind", path), kind_path));
  } catch (const PreconditionError& e) {
    fail(kind_path, e.what());
  }
  const json* table = optional_field(j, "table");
  if (rel.kind == RelationKind::explicit_table) {
    if (!table) fail(join_path(path, "table"), "the explicit relation needs a table");
    if (!table->is_object()) fail(join_path(path, "table"), "expected an object mapping parameters to vertex lists");
    for (const auto& [key, value] : table->items()) {
      if (key.empty()) fail(join_path(path, "table"), "parameter labels must be non-empty");
      rel.table.emplace(ParameterId(key), label_set<VertexId>(value, join_path(join_path(path, "table"), key)));
    }
  } else if (table) {
    fail(join_path(path, "table"), "a table is only allowed for the explicit relation");
  }
  return rel;
}

// ---------------------------------------------------------------------------
// Run specs

RunSpec run_spec_from_json(const json& j, GraphPtr inherited_graph, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a run-spec object");
  RunSpec spec;
  if (const json* g = optional_field(j, "graph"))
    spec.graph = share(graph_from_json(*g, join_path(path, "graph")));
  else if (inherited_graph)
    spec.graph = std::move(inherited_graph);
  else
    fail(join_path(path, "graph"), "required field is missing");

  const json& rel = require(j, "relation", path);
  spec.relation = relation_from_json(rel, join_path(path, "relation"));

  const json* top = optional_field(j, "parameters");
  const json* inner = rel.is_object() ? optional_field(rel, "parameters") : nullptr;
  if (!top && !inner) fail(join_path(path, "parameters"), "required field is missing (top level or inside relation)");
  if (top) spec.params = label_set<ParameterId>(*top, join_path(path, "parameters"));
  if (inner) {
    auto p = label_set<ParameterId>(*inner, join_path(path, "relation.parameters"));
    if (top && p != spec.params) fail(join_path(path, "parameters"), "differs from relation.parameters");
    spec.params = std::move(p);
  }

  spec.target = label_set<VertexId>(require(j, "target", path), join_path(path, "target"));
  for (const auto& v : spec.target)
    if (!spec.graph->has_vertex(v)) fail(join_path(path, "target"), "unknown vertex '" + v.str() + "'");
  if (spec.relation.kind != RelationKind::explicit_table)
    for (const auto& p : spec.params)
      if (!spec.graph->has_vertex(VertexId(p.str())))
        fail(join_path(path, "parameters"), "parameter '" + p.str() + "' is not a vertex of the graph, as the " +
                                                std::string(to_string(spec.relation.kind)) + " relation requires");

  if (const json* second = optional_field(j, "second"))
    spec.second = std::make_shared<const RunSpec>(run_spec_from_json(*second, spec.graph, join_path(path, "second")));
  return spec;
}

SoftRoughGraph build(const RunSpec& spec) {
  return build_soft_rough_graph(spec.graph, spec.params, spec.relation, spec.target);
}

// ---------------------------------------------------------------------------
// Soft rough graphs

json to_json(const SoftRoughGraph& srg) {
  json soft = json::object();
  for (const auto& [p, image] : srg.soft_set().assignment()) soft[p.str()] = label_array(image);
  json edge_soft = json::object();
  for (const auto& [p, image] : srg.edge_images()) edge_soft[p.str()] = label_array(image);
  const auto& va = srg.vertex_approx();
  const auto& ea = srg.edge_approx();
  return json{
      {"relation", to_json(srg.relation())},
      {"parameters", label_array(srg.params())},
      {"target", label_array(srg.target())},
      {"host", to_json(srg.host())},
      {"softSet", std::move(soft)},
      {"edgeSoftSet", std::move(edge_soft)},
      {"vertexApproximation",
       {{"lower", label_array(va.lower)}, {"upper", label_array(va.upper)}, {"definable", is_definable(va)}}},
      {"edgeApproximation",
       {{"lower", label_array(ea.lower)}, {"upper", label_array(ea.upper)}, {"definable", is_definable(ea)}}},
      {"lowerGraph", to_json(srg.lower())},
      {"upperGraph", to_json(srg.upper())},
  };
}

SoftRoughGraph soft_rough_graph_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a soft rough graph object");
  GraphPtr host = share(graph_from_json(require(j, "host", path), join_path(path, "host")));
  RelationSpec rel = relation_from_json(require(j, "relation", path), join_path(path, "relation"));
  auto params = label_set<ParameterId>(require(j, "parameters", path), join_path(path, "parameters"));
  auto target = label_set<VertexId>(require(j, "target", path), join_path(path, "target"));

  SoftRoughGraph srg = build_soft_rough_graph(host, params, rel, target);
  json rebuilt = to_json(srg);
  for (const char* key : {"softSet", "edgeSoftSet", "vertexApproximation", "edgeApproximation", "lowerGraph",
                          "upperGraph"}) {
    const json* stored = optional_field(j, key);
    if (stored && *stored != rebuilt[key]) fail(join_path(path, key), "stored value disagrees with recomputation");
  }
  return srg;
}

json to_json(const InducedFlags& f) {
  return json{{"lowerVertexInduced", f.lower_vertex_induced},
              {"upperVertexInduced", f.upper_vertex_induced},
              {"lowerEdgeInduced", f.lower_edge_induced},
              {"upperEdgeInduced", f.upper_edge_induced}};
}

json to_json(const SubgraphReport& r) {
  return json{
      {"verdict", r.verdict()},
      {"conditions",
       {{"parametersNested", r.params_nested}, {"lowerSubgraph", r.lower_subgraph}, {"upperSubgraph", r.upper_subgraph}}},
      {"sameTarget", r.same_target},
      {"containments",
       {{"vertexLower", r.vertex_lower_contained},
        {"vertexUpper", r.vertex_upper_contained},
        {"edgeLower", r.edge_lower_contained},
        {"edgeUpper", r.edge_upper_contained}}},
      {"containmentVerdict", r.containment_verdict()},
  };
}

json to_json(const CombineResult& r) {
  json params = json::array();
  for (const auto& [a, b] : r.params) params.push_back(json::array({a.str(), b.str()}));
  json target = json::array();
  for (const auto& [x, y] : r.target) target.push_back(json::array({x.str(), y.str()}));
  return json{
      {"mode", std::string(to_string(r.mode))},
      {"lowerVertices", label_array(r.sets.lower_vertices)},
      {"lowerEdges", label_array(r.sets.lower_edges)},
      {"upperVertices", label_array(r.sets.upper_vertices)},
      {"upperEdges", label_array(r.sets.upper_edges)},
      {"lowerWellFormed", r.lower_well_formed},
      {"upperWellFormed", r.upper_well_formed},
      {"parameters", std::move(params)},
      {"target", std::move(target)},
  };
}

json to_json(const SoftRoughProduct& p) {
  return json{
      {"kind", std::string(to_string(p.kind))},
      {"lowerGraph", to_json(p.lower)},
      {"upperGraph", to_json(p.upper)},
      {"lowerInHostProduct", p.lower_in_host},
      {"upperInHostProduct", p.upper_in_host},
      {"hostProduct", {{"vertexCount", p.host_product.order()}, {"edgeCount", p.host_product.size()}}},
  };
}

json to_json(const CensusReport& report) {
  json checks = json::object();
  for (const auto& [name, t] : report.per_check) {
    json examples = json::array();
    for (const auto& ce : t.counterexamples) {
      json item{{"parameters", label_array(ce.params)}, {"target", label_array(ce.target)}};
      if (ce.second_params) item["secondParameters"] = label_array(*ce.second_params);
      if (ce.second_target) item["secondTarget"] = label_array(*ce.second_target);
      item["detail"] = ce.detail;
      examples.push_back(std::move(item));
    }
    checks[name] = json{{"passes", t.passes},
                        {"failures", t.failures},
                        {"skipped", t.skipped},
                        {"observation", t.observation},
                        {"counterexamples", std::move(examples)}};
  }
  json definability = json::object();
  for (const auto& [params, stats] : report.definability)
    definability[params] = json{{"definable", stats.definable}, {"rough", stats.rough}};
  json counters = json::object();
  for (const auto& [name, count] : report.counters) counters[name] = count;
  return json{{"subject", report.subject},      {"instanceCount", report.instance_count},
              {"passed", report.passed()},       {"checks", std::move(checks)},
              {"definability", std::move(definability)}, {"counters", std::move(counters)}};
}

CensusConfig census_config_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a census config object");
  CensusConfig cfg;
  cfg.host = share(graph_from_json(require(j, "graph", path), join_path(path, "graph")));
  cfg.relation = relation_from_json(require(j, "relation", path), join_path(path, "relation"));
  if (const json* m = optional_field(j, "maxParams")) cfg.max_params = require_count(*m, join_path(path, "maxParams"));
  if (const json* e = optional_field(j, "includeEmpty")) cfg.include_empty = require_bool(*e, join_path(path, "includeEmpty"));
  if (const json* c = optional_field(j, "vertexCap")) cfg.vertex_cap = require_count(*c, join_path(path, "vertexCap"));
  if (const json* c = optional_field(j, "checks")) {
    auto names = string_list(*c, join_path(path, "checks"));
    cfg.checks = {names.begin(), names.end()};
    for (std::size_t i = 0; i < names.size(); ++i)
      if (std::find(known_checks().begin(), known_checks().end(), names[i]) == known_checks().end())
        fail(index_path(join_path(path, "checks"), i), "unknown check '" + names[i] + "'");
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// DOT

std::string to_dot(const SoftRoughGraph& srg) {
  std::ostringstream os;
  os << "graph \"soft_rough_graph\" {\n";
  dot_cluster(os, srg.lower(), "lower", "H_*");
  dot_cluster(os, srg.upper(), "upper", "H^*");
  os << "}\n";
  return os.str();
}

std::string to_dot(const SoftRoughProduct& p) {
  std::ostringstream os;
  os << "graph " << dot_quote(std::string(to_string(p.kind)) + "_product") << " {\n";
  dot_cluster(os, p.lower, "lower", "lower product");
  dot_cluster(os, p.upper, "upper", "upper product");
  os << "}\n";
  return os.str();
}

}  // namespace srg::io
