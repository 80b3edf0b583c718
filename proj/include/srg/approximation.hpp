#pragma once

#include <vector>

#include "srg/soft_set.hpp"

namespace srg {

/// Blocks of an equivalence relation: pairwise disjoint, non-empty, and
/// covering the universe (which is their union).
class Partition {
 public:
  explicit Partition(std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  const VertexSet& universe() const noexcept { return universe_; }

 private:
  std::vector<VertexSet> blocks_;
  VertexSet universe_;
};

struct PawlakApproximation {
  VertexSet lower;
  VertexSet upper;
  bool definable = false;
};

/// Classical rough approximation: lower is the union of blocks inside x,
/// upper the union of blocks meeting x.
PawlakApproximation pawlak_approx(const Partition& p, const VertexSet& x);

/// (lower, upper, A, X) over either the vertex or the edge universe.
template <class Id>
struct SoftRoughSet {
  std::set<Id> lower;
  std::set<Id> upper;
  ParameterSet params;
  VertexSet target;

  friend bool operator==(const SoftRoughSet&, const SoftRoughSet&) = default;
};

using VertexRoughSet = SoftRoughSet<VertexId>;
using EdgeRoughSet = SoftRoughSet<EdgeId>;

/// lower = {u : ∃a ∈ A, u ∈ F(a) ⊆ X},  upper = {u : ∃a ∈ A, u ∈ F(a), F(a) ∩ X ≠ ∅}.
VertexRoughSet vertex_approx(const SoftSet& f, const VertexSet& x);

/// Parameter-wise edge approximation: an edge is in the lower (upper) set when
/// it lies in some K(a) whose F(a) is inside (meets) X.
EdgeRoughSet edge_approx(const EdgeSoftSet& k, const SoftSet& f, const VertexSet& x);

template <class Id>
bool is_definable(const SoftRoughSet<Id>& s) {
  return s.lower == s.upper;
}

}  // namespace srg
