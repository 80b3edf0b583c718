#include "srg/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace srg {

Endpoints::Endpoints(VertexId a, VertexId b) : low(std::move(a)), high(std::move(b)) {
  if (high < low) std::swap(low, high);
}

SimpleGraph::SimpleGraph(VertexSet vertices, EdgeMap edges) : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& v : vertices_) adjacency_.emplace(v, VertexSet{});
  for (const auto& [label, ends] : edges_) {
    if (ends.low == ends.high) throw PreconditionError("edge " + label.str() + " is a loop at " + ends.low.str());
    for (const auto* v : {&ends.low, &ends.high})
      if (!vertices_.contains(*v))
        throw LookupError("edge " + label.str() + " has endpoint " + v->str() + " which is not a vertex");
    auto [it, fresh] = by_pair_.emplace(ends, label);
    if (!fresh)
      throw PreconditionError("edges " + it->second.str() + " and " + label.str() + " join the same pair " +
                              ends.low.str() + "," + ends.high.str());
    adjacency_[ends.low].insert(ends.high);
    adjacency_[ends.high].insert(ends.low);
  }
}

const Endpoints& SimpleGraph::endpoints(const EdgeId& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw LookupError("unknown edge " + e.str());
  return it->second;
}

std::optional<EdgeId> SimpleGraph::edge_between(const VertexId& u, const VertexId& v) const {
  if (u == v) return std::nullopt;
  auto it = by_pair_.find(Endpoints(u, v));
  if (it == by_pair_.end()) return std::nullopt;
  return it->second;
}

EdgeSet SimpleGraph::edge_ids() const {
  EdgeSet out;
  for (const auto& [label, ends] : edges_) out.insert(out.end(), label);
  return out;
}

const VertexSet& SimpleGraph::adjacent(const VertexId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw LookupError("unknown vertex " + v.str());
  return it->second;
}

SimpleGraph make_graph(std::initializer_list<std::string_view> vertices, std::initializer_list<EdgeSpec> edges) {
  VertexSet vs;
  for (auto v : vertices) vs.insert(VertexId(v));
  EdgeMap es;
  for (const auto& e : edges) {
    auto [it, fresh] = es.emplace(EdgeId(e.label), Endpoints(e.u, e.v));
    if (!fresh) throw PreconditionError("duplicate edge label " + e.label);
  }
  return SimpleGraph(std::move(vs), std::move(es));
}

VertexSet neighborhood(const SimpleGraph& g, const VertexId& v, bool closed) {
  VertexSet out = g.adjacent(v);
  if (closed) out.insert(v);
  return out;
}

std::size_t DistanceTable::distance(const VertexId& u, const VertexId& v) const {
  auto index = [&](const VertexId& x) {
    auto it = std::lower_bound(order.begin(), order.end(), x);
    if (it == order.end() || *it != x) throw LookupError("unknown vertex " + x.str());
    return static_cast<std::size_t>(it - order.begin());
  };
  return dist[index(u)][index(v)];
}

DistanceTable distance_and_diameter(const SimpleGraph& g) {
  DistanceTable t;
  t.order.assign(g.vertices().begin(), g.vertices().end());
  const std::size_t n = t.order.size();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(t.order[i], i);

  t.dist.assign(n, std::vector<std::size_t>(n, kUnreachable));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = t.dist[s];
    row[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& w : g.adjacent(t.order[u])) {
        std::size_t wi = index.at(w);
        if (row[wi] == kUnreachable) {
          row[wi] = row[u] + 1;
          queue.push_back(wi);
        }
      }
    }
    for (std::size_t d : row) {
      if (d == kUnreachable)
        t.infinite = true;
      else
        t.diameter = std::max(t.diameter, d);
    }
  }
  return t;
}

bool is_connected(const SimpleGraph& g) {
  if (g.empty()) return true;
  VertexSet seen{*g.vertices().begin()};
  std::vector<VertexId> stack{*g.vertices().begin()};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& w : g.adjacent(u))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == g.order();
}

bool is_acyclic(const SimpleGraph& g) {
  // Union-find over vertex labels; an edge closing a component is a cycle.
  std::map<VertexId, VertexId> parent;
  for (const auto& v : g.vertices()) parent.emplace(v, v);
  auto find = [&](VertexId v) {
    while (parent.at(v) != v) v = parent.at(v);
    return v;
  };
  for (const auto& [label, ends] : g.edges()) {
    VertexId a = find(ends.low);
    VertexId b = find(ends.high);
    if (a == b) return false;
    parent.at(a) = b;
  }
  return true;
}

bool is_tree(const SimpleGraph& g) {
  return !g.empty() && g.size() + 1 == g.order() && is_connected(g);
}

bool is_subgraph(const SimpleGraph& h, const SimpleGraph& g) {
  if (!is_subset(h.vertices(), g.vertices())) return false;
  for (const auto& [label, ends] : h.edges()) {
    auto it = g.edges().find(label);
    if (it == g.edges().end() || it->second != ends) return false;
  }
  return true;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
  for (const auto& v : s)
    if (!g.has_vertex(v)) throw LookupError("induced_subgraph: unknown vertex " + v.str());
  EdgeMap edges;
  for (const auto& [label, ends] : g.edges())
    if (s.contains(ends.low) && s.contains(ends.high)) edges.emplace(label, ends);
  return SimpleGraph(s, std::move(edges));
}

SimpleGraph edge_induced_subgraph(const SimpleGraph& g, const EdgeSet& t) {
  VertexSet vertices;
  EdgeMap edges;
  for (const auto& e : t) {
    if (!g.has_edge(e)) throw LookupError("edge_induced_subgraph: unknown edge " + e.str());
    const auto& ends = g.endpoints(e);
    vertices.insert(ends.low);
    vertices.insert(ends.high);
    edges.emplace(e, ends);
  }
  return SimpleGraph(std::move(vertices), std::move(edges));
}

bool endpoint_closed(const SimpleGraph& host, const VertexSet& vertices, const EdgeSet& edges) {
  for (const auto& e : edges) {
    const auto& ends = host.endpoints(e);
    if (!vertices.contains(ends.low) || !vertices.contains(ends.high)) return false;
  }
  return true;
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "graph " << quote(std::string(name)) << " {\n";
  for (const auto& v : g.vertices()) os << "  " << quote(v.str()) << ";\n";
  for (const auto& [label, ends] : g.edges())
    os << "  " << quote(ends.low.str()) << " -- " << quote(ends.high.str()) << " [label=" << quote(label.str())
       << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace srg
