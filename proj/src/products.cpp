#include <string>

#include "srg/graph.hpp"

namespace srg {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::join: return "join";
    case ProductKind::corona: return "corona";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view text) {
  for (auto kind : kAllProductKinds)
    if (to_string(kind) == text) return kind;
  throw PreconditionError("unknown product kind '" + std::string(text) +
                          "' (expected cartesian, lexicographic, join or corona)");
}

VertexId pair_vertex(const VertexId& u, const VertexId& v) { return VertexId("(" + u.str() + "," + v.str() + ")"); }

EdgeId product_edge_label(ProductKind kind, const VertexId& a, const VertexId& b) {
  Endpoints ends(a, b);
  return EdgeId(std::string(to_string(kind)) + ":" + ends.low.str() + "|" + ends.high.str());
}

namespace {

class ProductBuilder {
 public:
  explicit ProductBuilder(ProductKind kind) : kind_(kind) {}

  void vertex(const VertexId& v) {
    if (!vertices_.insert(v).second)
      throw PreconditionError(std::string(to_string(kind_)) + " product: vertex label " + v.str() + " produced twice");
  }

  void edge(const VertexId& a, const VertexId& b) { edges_.emplace(product_edge_label(kind_, a, b), Endpoints(a, b)); }

  SimpleGraph build() && { return SimpleGraph(std::move(vertices_), std::move(edges_)); }

 private:
  ProductKind kind_;
  VertexSet vertices_;
  EdgeMap edges_;
};

void require_disjoint(const SimpleGraph& g1, const SimpleGraph& g2, ProductKind kind) {
  for (const auto& v : g1.vertices())
    if (g2.has_vertex(v))
      throw PreconditionError(std::string(to_string(kind)) + " product needs disjoint vertex labels; " + v.str() +
                              " occurs in both graphs");
}

SimpleGraph cartesian(const SimpleGraph& g1, const SimpleGraph& g2) {
  ProductBuilder b(ProductKind::cartesian);
  for (const auto& u : g1.vertices())
    for (const auto& v : g2.vertices()) b.vertex(pair_vertex(u, v));
  for (const auto& u : g1.vertices())
    for (const auto& [label, ends] : g2.edges()) b.edge(pair_vertex(u, ends.low), pair_vertex(u, ends.high));
  for (const auto& x : g2.vertices())
    for (const auto& [label, ends] : g1.edges()) b.edge(pair_vertex(ends.low, x), pair_vertex(ends.high, x));
  return std::move(b).build();
}

SimpleGraph lexicographic(const SimpleGraph& g1, const SimpleGraph& g2) {
  ProductBuilder b(ProductKind::lexicographic);
  for (const auto& u : g1.vertices())
    for (const auto& v : g2.vertices()) b.vertex(pair_vertex(u, v));
  for (const auto& [label, ends] : g1.edges())
    for (const auto& v : g2.vertices())
      for (const auto& w : g2.vertices()) b.edge(pair_vertex(ends.low, v), pair_vertex(ends.high, w));
  for (const auto& a : g1.vertices())
    for (const auto& [label, ends] : g2.edges()) b.edge(pair_vertex(a, ends.low), pair_vertex(a, ends.high));
  return std::move(b).build();
}

SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2) {
  require_disjoint(g1, g2, ProductKind::join);
  ProductBuilder b(ProductKind::join);
  for (const auto& v : g1.vertices()) b.vertex(v);
  for (const auto& v : g2.vertices()) b.vertex(v);
  for (const auto* g : {&g1, &g2})
    for (const auto& [label, ends] : g->edges()) b.edge(ends.low, ends.high);
  for (const auto& u : g1.vertices())
    for (const auto& v : g2.vertices()) b.edge(u, v);
  return std::move(b).build();
}

SimpleGraph corona(const SimpleGraph& g1, const SimpleGraph& g2) {
  if (g1.empty()) throw PreconditionError("corona product is undefined on an empty base graph");
  require_disjoint(g1, g2, ProductKind::corona);
  ProductBuilder b(ProductKind::corona);
  for (const auto& v : g1.vertices()) b.vertex(v);
  for (const auto& [label, ends] : g1.edges()) b.edge(ends.low, ends.high);
  // vertices() iterates in label order, so the i-th copy meets the i-th vertex.
  for (const auto& base : g1.vertices()) {
    for (const auto& w : g2.vertices()) {
      b.vertex(pair_vertex(base, w));
      b.edge(base, pair_vertex(base, w));
    }
    for (const auto& [label, ends] : g2.edges()) b.edge(pair_vertex(base, ends.low), pair_vertex(base, ends.high));
  }
  return std::move(b).build();
}

}  // namespace

SimpleGraph product(const SimpleGraph& g1, const SimpleGraph& g2, ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return cartesian(g1, g2);
    case ProductKind::lexicographic: return lexicographic(g1, g2);
    case ProductKind::join: return join(g1, g2);
    case ProductKind::corona: return corona(g1, g2);
  }
  throw PreconditionError("unknown product kind");
}

}  // namespace srg
