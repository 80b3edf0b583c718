#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srg/approximation.hpp"

namespace srg {

/// The pair of approximation subgraphs H_* = (F_*(X), K_*(X)) and
/// H^* = (F^*(X), K^*(X)) of a host graph, together with everything they
/// were computed from.
///
/// Invariants, checked on construction: H_* ⊆ H^* ⊆ host, F_*(X) ⊆ X.
class SoftRoughGraph {
 public:
  const SimpleGraph& host() const noexcept { return soft_set_.host(); }
  const GraphPtr& host_ptr() const noexcept { return soft_set_.host_ptr(); }
  const RelationSpec& relation() const noexcept { return relation_; }
  const ParameterSet& params() const noexcept { return soft_set_.params(); }
  const VertexSet& target() const noexcept { return vertex_approx_.target; }

  const SoftSet& soft_set() const noexcept { return soft_set_; }
  const std::map<ParameterId, EdgeSet>& edge_images() const noexcept { return edge_images_; }

  const VertexRoughSet& vertex_approx() const noexcept { return vertex_approx_; }
  const EdgeRoughSet& edge_approx() const noexcept { return edge_approx_; }

  /// H_*
  const SimpleGraph& lower() const noexcept { return lower_; }
  /// H^*
  const SimpleGraph& upper() const noexcept { return upper_; }

  friend bool operator==(const SoftRoughGraph& a, const SoftRoughGraph& b) {
    return a.host() == b.host() && a.relation_ == b.relation_ && a.soft_set_ == b.soft_set_ &&
           a.edge_images_ == b.edge_images_ && a.vertex_approx_ == b.vertex_approx_ &&
           a.edge_approx_ == b.edge_approx_ && a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

 private:
  friend SoftRoughGraph assemble_soft_rough_graph(SoftSet f, RelationSpec rel, const VertexSet& x);

  SoftRoughGraph(SoftSet f, RelationSpec rel) : soft_set_(std::move(f)), relation_(std::move(rel)) {}

  SoftSet soft_set_;
  RelationSpec relation_;
  std::map<ParameterId, EdgeSet> edge_images_;
  VertexRoughSet vertex_approx_;
  EdgeRoughSet edge_approx_;
  SimpleGraph lower_;
  SimpleGraph upper_;
};

/// Builds F, K, both approximations and both subgraphs, then checks the
/// structural invariants. Rejects an empty parameter set or an empty target
/// with PreconditionError.
SoftRoughGraph build_soft_rough_graph(GraphPtr g, const ParameterSet& a, const RelationSpec& rel, const VertexSet& x);
inline SoftRoughGraph build_soft_rough_graph(const SimpleGraph& g, const ParameterSet& a, const RelationSpec& rel,
                                             const VertexSet& x) {
  return build_soft_rough_graph(share(g), a, rel, x);
}

/// Same construction without the non-emptiness preconditions; used by the
/// census when empty instances are requested. Throws InvariantViolation if a
/// structural invariant fails.
SoftRoughGraph assemble_soft_rough_graph(SoftSet f, RelationSpec rel, const VertexSet& x);

/// H(a) = (F(a), K(a)) for every parameter, in parameter order.
std::vector<std::pair<ParameterId, SimpleGraph>> build_soft_graph(const SimpleGraph& g, const SoftSet& f);

struct InducedFlags {
  bool lower_vertex_induced = false;
  bool upper_vertex_induced = false;
  bool lower_edge_induced = false;
  bool upper_edge_induced = false;

  friend bool operator==(const InducedFlags&, const InducedFlags&) = default;
};

InducedFlags classify_induced(const SoftRoughGraph& srg);

/// Outcome of the soft rough subgraph test together with the four set
/// containments of the equivalent characterisation.
struct SubgraphReport {
  bool params_nested = false;   // B ⊆ A
  bool lower_subgraph = false;  // H2_* ⊆ H1_*
  bool upper_subgraph = false;  // H2^* ⊆ H1^*
  bool same_target = false;

  bool vertex_lower_contained = false;
  bool vertex_upper_contained = false;
  bool edge_lower_contained = false;
  bool edge_upper_contained = false;

  bool verdict() const { return params_nested && lower_subgraph && upper_subgraph; }
  bool containment_verdict() const {
    return vertex_lower_contained && vertex_upper_contained && edge_lower_contained && edge_upper_contained;
  }
};

/// Throws PreconditionError when the hosts differ and InvariantViolation when
/// B ⊆ A holds but the direct verdict and the containment verdict disagree.
SubgraphReport is_soft_rough_subgraph(const SoftRoughGraph& candidate, const SoftRoughGraph& parent);

bool is_soft_rough_tree(const SoftRoughGraph& srg);

// ---------------------------------------------------------------------------
// AND / OR

enum class CombineMode { and_mode, or_mode };

std::string_view to_string(CombineMode mode);
CombineMode parse_combine_mode(std::string_view text);

/// The four approximation sets of a soft rough graph, detached from it.
struct ApproximationSets {
  VertexSet lower_vertices;
  EdgeSet lower_edges;
  VertexSet upper_vertices;
  EdgeSet upper_edges;

  friend bool operator==(const ApproximationSets&, const ApproximationSets&) = default;
};

ApproximationSets approximation_sets(const SoftRoughGraph& srg);

struct CombineResult {
  CombineMode mode = CombineMode::and_mode;
  ApproximationSets sets;
  bool lower_well_formed = false;
  bool upper_well_formed = false;
  // Provenance only: A×B and X×Y.
  std::vector<std::pair<ParameterId, ParameterId>> params;
  std::vector<std::pair<VertexId, VertexId>> target;
};

/// Component-wise ∩ (and) or ∪ (or) of two set quadruples over one host.
/// Well-formedness flags say whether each edge set is endpoint-closed in the
/// matching vertex set. Provenance fields are left empty.
CombineResult combine_sets(const SimpleGraph& host, const ApproximationSets& s1, const ApproximationSets& s2,
                           CombineMode mode);

/// Requires both operands to share a host graph.
CombineResult combine(const SoftRoughGraph& s1, const SoftRoughGraph& s2, CombineMode mode);

// ---------------------------------------------------------------------------
// Products

struct SoftRoughProduct {
  ProductKind kind = ProductKind::cartesian;
  SimpleGraph lower;         // H1_* ⊗ H2_*
  SimpleGraph upper;         // H1^* ⊗ H2^*
  SimpleGraph host_product;  // G1 ⊗ G2
  bool lower_in_host = false;
  bool upper_in_host = false;

  bool verified() const { return lower_in_host && upper_in_host; }
};

/// Products of the stored subgraphs; no re-approximation over the product.
/// Subgraph verification against the host product is recorded in the result.
SoftRoughProduct srg_product(const SoftRoughGraph& s1, const SoftRoughGraph& s2, ProductKind kind);

}  // namespace srg
