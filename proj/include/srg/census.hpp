#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "srg/soft_rough_graph.hpp"

namespace srg {

/// Names of the property checks the census knows about.
namespace checks {
inline constexpr const char* kLowerSubsetUpperVertex = "lower_subset_upper.vertex";
inline constexpr const char* kLowerSubsetUpperEdge = "lower_subset_upper.edge";
inline constexpr const char* kVertexLowerInTarget = "vertex_lower_in_target";
inline constexpr const char* kTargetInCoveredUpper = "target_in_covered_upper";
inline constexpr const char* kMonotoneInTarget = "monotone_in_target";
inline constexpr const char* kMonotoneInParams = "monotone_in_params";
inline constexpr const char* kEndpointClosure = "endpoint_closure";
inline constexpr const char* kSubgraphChain = "subgraph_chain";
inline constexpr const char* kOracleAgreement = "oracle_agreement";
inline constexpr const char* kSubgraphIff = "subgraph_iff";
inline constexpr const char* kSubgraphIffUnrestricted = "subgraph_iff_unrestricted";
inline constexpr const char* kTreeHostAcyclic = "tree_host_acyclic";
inline constexpr const char* kTreeHostTree = "tree_host_tree";
inline constexpr const char* kTreeSubAcyclic = "tree_sub_acyclic";
inline constexpr const char* kTreeSubTree = "tree_sub_tree";
inline constexpr const char* kOrWellFormed = "or_well_formed";
inline constexpr const char* kAndWellFormedFlag = "and_well_formed_flag";
}  // namespace checks

/// Every check above, in report order.
const std::vector<std::string>& known_checks();
/// Checks run when a config does not list any explicitly (all of them).
std::set<std::string> default_checks();
/// Observation checks: failures are reported but do not fail the census.
bool is_observation(const std::string& check);

inline constexpr std::size_t kDefaultVertexCap = 7;

struct CensusConfig {
  GraphPtr host;
  RelationSpec relation;
  std::optional<std::size_t> max_params;  // defaults to the size of the parameter universe
  bool include_empty = false;
  std::set<std::string> checks = default_checks();
  std::size_t vertex_cap = kDefaultVertexCap;
};

/// Everything needed to replay an instance by hand.
struct Instance {
  ParameterSet params;
  VertexSet target;
  std::optional<ParameterSet> second_params;
  std::optional<VertexSet> second_target;
  std::string detail;

  friend bool operator==(const Instance&, const Instance&) = default;
};

inline constexpr std::size_t kMaxRecordedCounterexamples = 8;

struct CheckTally {
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // check did not apply to the instance
  bool observation = false;
  std::vector<Instance> counterexamples;  // first few, canonical order

  const Instance* first_counterexample() const { return counterexamples.empty() ? nullptr : &counterexamples.front(); }
  std::size_t total() const { return passes + failures + skipped; }

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct DefinabilityStats {
  std::size_t definable = 0;
  std::size_t rough = 0;

  friend bool operator==(const DefinabilityStats&, const DefinabilityStats&) = default;
};

struct CensusReport {
  std::string subject;  // human-readable description of what was enumerated
  std::size_t instance_count = 0;
  std::map<std::string, CheckTally> per_check;
  std::map<std::string, DefinabilityStats> definability;  // keyed by rendered parameter set
  std::map<std::string, std::size_t> counters;            // auxiliary tallies (flag outcomes etc.)

  /// No failures outside observation checks.
  bool passed() const;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Enumerates every (A, X) with A ⊆ parameter universe, |A| ≤ max_params, and
/// X ⊆ V, non-empty unless include_empty. Subsets are visited in canonical
/// order: binary counting where bit i stands for the i-th label in sorted
/// order, A outermost. Each instance is recomputed by direct quantifier
/// evaluation on bitmasks and compared with the library, then every enabled
/// check is run.
CensusReport run_census(const CensusConfig& cfg);

/// All soft rough graphs of `host` with non-empty A (|A| ≤ max_params) and
/// non-empty X, in canonical order.
std::vector<SoftRoughGraph> enumerate_soft_rough_graphs(const GraphPtr& host, const RelationSpec& rel,
                                                        std::optional<std::size_t> max_params = std::nullopt);

/// Checks that products of the approximation subgraphs are subgraphs of the
/// host product, one check per kind ("product.<kind>"). Precondition failures
/// are counted as skipped with the reason recorded; corona is an observation
/// check evaluated under the lexicographic vertex ordering.
CensusReport verify_product_theorems(const std::vector<std::pair<SoftRoughGraph, SoftRoughGraph>>& pairs,
                                     const std::set<ProductKind>& kinds);

/// Non-isomorphic trees on n vertices labelled "t0".."t{n-1}", n ≥ 1.
std::vector<SimpleGraph> trees_of_order(std::size_t n);

/// Fixed-width summary table, one row per check.
std::string format_summary(const CensusReport& report);

}  // namespace srg
