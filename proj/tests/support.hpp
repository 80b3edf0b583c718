#pragma once

#include <string>
#include <vector>

#include "srg/io.hpp"
#include "srg/soft_rough_graph.hpp"

namespace srg::test {

inline std::string fixture(const std::string& name) { return std::string(SRG_FIXTURES) + "/" + name; }

inline io::RunSpec load_fixture(const std::string& name) {
  return io::run_spec_from_json(io::read_document(fixture(name)));
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"pentagon_chords.json", "cycle5_diameter.json", "hub7_parent.json",
                                              "hub7_child.json",      "wheel_pair.json",      "paths_product.json"};
  return names;
}

inline RelationSpec open_nbhd() { return {RelationKind::open_neighborhood, {}}; }
inline RelationSpec closed_nbhd() { return {RelationKind::closed_neighborhood, {}}; }
inline RelationSpec diameter() { return {RelationKind::diameter_distance, {}}; }

inline SimpleGraph cycle5() {
  return make_graph({"v1", "v2", "v3", "v4", "v5"},
                    {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v4"}, {"e4", "v4", "v5"}, {"e5", "v5", "v1"}});
}

inline SimpleGraph pentagon_chords() {
  return make_graph({"v1", "v2", "v3", "v4", "v5"}, {{"e1", "v1", "v2"},
                                                     {"e2", "v2", "v3"},
                                                     {"e3", "v3", "v4"},
                                                     {"e4", "v4", "v5"},
                                                     {"e5", "v5", "v1"},
                                                     {"e6", "v2", "v5"},
                                                     {"e7", "v3", "v5"},
                                                     {"e8", "v2", "v4"}});
}

inline SimpleGraph hub7() {
  return make_graph({"v1", "v2", "v3", "v4", "v5", "v6", "v7"}, {{"e1", "v1", "v2"},
                                                                 {"e2", "v2", "v3"},
                                                                 {"e3", "v3", "v4"},
                                                                 {"e4", "v4", "v5"},
                                                                 {"e5", "v4", "v6"},
                                                                 {"e6", "v5", "v6"},
                                                                 {"e7", "v2", "v6"},
                                                                 {"e8", "v3", "v6"},
                                                                 {"e9", "v1", "v5"},
                                                                 {"e10", "v1", "v7"},
                                                                 {"e11", "v5", "v7"}});
}

inline SimpleGraph wheel() {
  return make_graph({"v1", "v2", "v3", "v4", "v5"}, {{"e1", "v1", "v4"},
                                                     {"e2", "v3", "v4"},
                                                     {"e3", "v1", "v2"},
                                                     {"e4", "v2", "v3"},
                                                     {"e5", "v1", "v5"},
                                                     {"e6", "v2", "v5"},
                                                     {"e7", "v3", "v5"},
                                                     {"e8", "v4", "v5"}});
}

/// Path on the given labels; edges are named prefix1, prefix2, ...
inline SimpleGraph path(const std::vector<std::string>& vs, const std::string& prefix) {
  VertexSet vertices(vs.begin(), vs.end());
  EdgeMap edges;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    edges.emplace(EdgeId(prefix + std::to_string(i + 1)), Endpoints(vs[i], vs[i + 1]));
  return SimpleGraph(vertices, edges);
}

/// Every labelled simple graph on n vertices named prefix0.., edges named by pair.
inline std::vector<SimpleGraph> all_graphs(std::size_t n, const std::string& prefix) {
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.emplace_back(prefix + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<SimpleGraph> out;
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
    EdgeMap edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1)
        edges.emplace(EdgeId(vs[pairs[k].first].str() + vs[pairs[k].second].str()),
                      Endpoints(vs[pairs[k].first], vs[pairs[k].second]));
    out.emplace_back(VertexSet(vs.begin(), vs.end()), edges);
  }
  return out;
}

/// All subsets of a set, including the empty one.
template <class T>
std::vector<std::set<T>> subsets(const std::set<T>& s) {
  std::vector<T> items(s.begin(), s.end());
  std::vector<std::set<T>> out;
  for (unsigned long mask = 0; mask < (1ul << items.size()); ++mask) {
    std::set<T> sub;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask >> i & 1) sub.insert(items[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

inline ParameterSet as_params(const VertexSet& vs) {
  ParameterSet out;
  for (const auto& v : vs) out.insert(ParameterId(v.str()));
  return out;
}

// Brute-force restatements of the approximation definitions, written directly
// from the quantifiers and sharing no code with the library.

inline VertexSet oracle_image(const SimpleGraph& g, const VertexId& x, RelationKind kind) {
  VertexSet out;
  for (const auto& y : g.vertices()) {
    bool adjacent = g.edge_between(x, y).has_value();
    if (kind == RelationKind::open_neighborhood && adjacent) out.insert(y);
    if (kind == RelationKind::closed_neighborhood && (adjacent || x == y)) out.insert(y);
  }
  return out;
}

struct OracleSets {
  VertexSet lower_v, upper_v;
  EdgeSet lower_e, upper_e;
};

inline OracleSets oracle_approx(const SimpleGraph& g, const ParameterSet& a, RelationKind kind, const VertexSet& x) {
  OracleSets out;
  for (const auto& p : a) {
    VertexSet image = oracle_image(g, VertexId(p.str()), kind);
    bool inside = true, meets = false;
    for (const auto& v : image) {
      if (!x.contains(v)) inside = false;
      if (x.contains(v)) meets = true;
    }
    for (const auto& v : image) {
      if (inside) out.lower_v.insert(v);
      if (meets) out.upper_v.insert(v);
    }
    for (const auto& [e, ends] : g.edges()) {
      if (!image.contains(ends.low) || !image.contains(ends.high)) continue;
      if (inside) out.lower_e.insert(e);
      if (meets) out.upper_e.insert(e);
    }
  }
  return out;
}

}  // namespace srg::test
