#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srg/label.hpp"

namespace srg {

/// Unordered vertex pair stored with `low < high`.
struct Endpoints {
  VertexId low;
  VertexId high;

  Endpoints(VertexId a, VertexId b);

  bool contains(const VertexId& v) const { return low == v || high == v; }
  const VertexId& other(const VertexId& v) const { return v == low ? high : low; }

  friend auto operator<=>(const Endpoints&, const Endpoints&) = default;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

using EdgeMap = std::map<EdgeId, Endpoints>;

/// Simple undirected graph with labelled vertices and labelled edges.
///
/// Immutable once constructed. The constructor enforces simplicity: every
/// endpoint is a vertex, no loops, and no two labels name the same pair.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(VertexSet vertices, EdgeMap edges);

  const VertexSet& vertices() const noexcept { return vertices_; }
  const EdgeMap& edges() const noexcept { return edges_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
  bool has_edge(const EdgeId& e) const { return edges_.contains(e); }

  /// Throws LookupError for unknown labels.
  const Endpoints& endpoints(const EdgeId& e) const;
  std::optional<EdgeId> edge_between(const VertexId& u, const VertexId& v) const;

  EdgeSet edge_ids() const;

  /// Open neighbourhood; throws LookupError for unknown vertices.
  const VertexSet& adjacent(const VertexId& v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  VertexSet vertices_;
  EdgeMap edges_;
  std::map<VertexId, VertexSet> adjacency_;
  std::map<Endpoints, EdgeId> by_pair_;
};

/// Convenience for tests and fixtures: `make_graph({"a","b"}, {{"e1","a","b"}})`.
struct EdgeSpec {
  std::string label;
  std::string u;
  std::string v;
};
SimpleGraph make_graph(std::initializer_list<std::string_view> vertices, std::initializer_list<EdgeSpec> edges);

// ---------------------------------------------------------------------------
// Structural queries

VertexSet neighborhood(const SimpleGraph& g, const VertexId& v, bool closed = false);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct DistanceTable {
  std::vector<VertexId> order;                  // canonical vertex order
  std::vector<std::vector<std::size_t>> dist;   // kUnreachable for disconnected pairs
  std::size_t diameter = 0;                     // max over connected pairs
  bool infinite = false;                        // true iff some pair is unreachable

  std::size_t distance(const VertexId& u, const VertexId& v) const;
};

DistanceTable distance_and_diameter(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);
bool is_acyclic(const SimpleGraph& g);

/// Connected, acyclic and non-empty. A single vertex is a tree; the empty
/// graph is not.
bool is_tree(const SimpleGraph& g);

/// Vertex containment, edge-label containment, and identical endpoints for
/// every shared edge label.
bool is_subgraph(const SimpleGraph& h, const SimpleGraph& g);

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);
SimpleGraph edge_induced_subgraph(const SimpleGraph& g, const EdgeSet& t);

/// Every edge has both endpoints in `vertices`.
bool endpoint_closed(const SimpleGraph& host, const VertexSet& vertices, const EdgeSet& edges);

// ---------------------------------------------------------------------------
// Products

enum class ProductKind { cartesian, lexicographic, join, corona };

std::string_view to_string(ProductKind kind);
ProductKind parse_product_kind(std::string_view text);
inline constexpr ProductKind kAllProductKinds[] = {ProductKind::cartesian, ProductKind::lexicographic,
                                                   ProductKind::join, ProductKind::corona};

/// Label of the product vertex (u, v): "(u,v)".
VertexId pair_vertex(const VertexId& u, const VertexId& v);

/// Deterministic label for a synthesized product edge: "<kind>:<low>|<high>".
EdgeId product_edge_label(ProductKind kind, const VertexId& a, const VertexId& b);

/// The four binary graph products.
///
///  - cartesian:     V1×V2; (u,v)~(u,w) for vw∈E2 and (y,x)~(z,x) for yz∈E1.
///  - lexicographic: V1×V2; (a,v)~(b,w) when ab∈E1, or a=b and vw∈E2.
///  - join:          V1∪V2, E1∪E2, plus every cross pair. Needs disjoint labels.
///  - corona:        g1 plus one copy of g2 per vertex of g1; copy i is joined to
///                   the i-th vertex of g1 in label order and its vertices are
///                   labelled "(u,w)" after the base vertex u. Needs disjoint
///                   labels and a non-empty g1.
///
/// All edges of the result carry product_edge_label() labels.
SimpleGraph product(const SimpleGraph& g1, const SimpleGraph& g2, ProductKind kind);

// ---------------------------------------------------------------------------
// Export

/// Graphviz document: one undirected graph, edge labels as `label` attributes.
std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace srg
