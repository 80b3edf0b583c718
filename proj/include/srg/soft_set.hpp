#pragma once

#include <map>
#include <memory>
#include <string_view>

#include "srg/graph.hpp"

namespace srg {

using GraphPtr = std::shared_ptr<const SimpleGraph>;

inline GraphPtr share(SimpleGraph g) { return std::make_shared<const SimpleGraph>(std::move(g)); }

enum class RelationKind { open_neighborhood, closed_neighborhood, diameter_distance, explicit_table };

std::string_view to_string(RelationKind kind);
RelationKind parse_relation_kind(std::string_view text);

/// How each parameter x is mapped to F(x) = {y : x R y}.
///
///  - open_neighborhood:   y ∈ N(x)
///  - closed_neighborhood: y ∈ N[x]
///  - diameter_distance:   d(x, y) = diam(G); host must be connected
///  - explicit_table:      F(x) read from `table`; parameters need not be vertices
struct RelationSpec {
  RelationKind kind = RelationKind::open_neighborhood;
  std::map<ParameterId, VertexSet> table;

  friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

/// F: A → P(V) over a host graph.
class SoftSet {
 public:
  SoftSet(GraphPtr host, std::map<ParameterId, VertexSet> assignment);

  const SimpleGraph& host() const noexcept { return *host_; }
  const GraphPtr& host_ptr() const noexcept { return host_; }
  const ParameterSet& params() const noexcept { return params_; }
  const std::map<ParameterId, VertexSet>& assignment() const noexcept { return assignment_; }

  /// Throws LookupError for a parameter outside A.
  const VertexSet& operator()(const ParameterId& a) const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return (a.host_ == b.host_ || *a.host_ == *b.host_) && a.assignment_ == b.assignment_;
  }

 private:
  GraphPtr host_;
  ParameterSet params_;
  std::map<ParameterId, VertexSet> assignment_;
};

/// K(a) = host edges with both endpoints in F(a). Only obtainable from
/// edge_soft_set(), so it can never disagree with its F.
class EdgeSoftSet {
 public:
  const ParameterSet& params() const noexcept { return params_; }
  const std::map<ParameterId, EdgeSet>& assignment() const noexcept { return assignment_; }
  const EdgeSet& operator()(const ParameterId& a) const;

  /// True when this K was derived from `f` (same host object, same parameters).
  bool derived_from(const SoftSet& f) const;

 private:
  friend EdgeSoftSet edge_soft_set(const SimpleGraph& g, const SoftSet& f);

  const SimpleGraph* host_ = nullptr;
  ParameterSet params_;
  std::map<ParameterId, EdgeSet> assignment_;
};

SoftSet build_soft_set(GraphPtr g, const ParameterSet& a, const RelationSpec& rel);
inline SoftSet build_soft_set(const SimpleGraph& g, const ParameterSet& a, const RelationSpec& rel) {
  return build_soft_set(share(g), a, rel);
}

/// Requires f.host() == g.
EdgeSoftSet edge_soft_set(const SimpleGraph& g, const SoftSet& f);

}  // namespace srg
