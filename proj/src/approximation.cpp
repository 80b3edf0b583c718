#include "srg/approximation.hpp"

#include <string>

namespace srg {

Partition::Partition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  for (const auto& block : blocks_) {
    if (block.empty()) throw PreconditionError("partition blocks must be non-empty");
    for (const auto& v : block)
      if (!universe_.insert(v).second) throw PreconditionError("partition blocks overlap at " + v.str());
  }
}

PawlakApproximation pawlak_approx(const Partition& p, const VertexSet& x) {
  for (const auto& v : x)
    if (!p.universe().contains(v)) throw LookupError("pawlak_approx: " + v.str() + " is outside the universe");
  PawlakApproximation out;
  for (const auto& block : p.blocks()) {
    if (is_subset(block, x)) out.lower.insert(block.begin(), block.end());
    if (intersects(block, x)) out.upper.insert(block.begin(), block.end());
  }
  out.definable = out.lower == out.upper;
  return out;
}

namespace {

void require_within_host(const SoftSet& f, const VertexSet& x) {
  for (const auto& v : x)
    if (!f.host().has_vertex(v)) throw LookupError("target contains " + v.str() + " which is not a host vertex");
}

}  // namespace

VertexRoughSet vertex_approx(const SoftSet& f, const VertexSet& x) {
  require_within_host(f, x);
  VertexRoughSet s{.lower = {}, .upper = {}, .params = f.params(), .target = x};
  for (const auto& [a, image] : f.assignment()) {
    if (is_subset(image, x)) s.lower.insert(image.begin(), image.end());
    if (intersects(image, x)) s.upper.insert(image.begin(), image.end());
  }
  return s;
}

EdgeRoughSet edge_approx(const EdgeSoftSet& k, const SoftSet& f, const VertexSet& x) {
  if (!k.derived_from(f)) throw PreconditionError("edge_approx: edge soft set was not derived from this soft set");
  require_within_host(f, x);
  EdgeRoughSet s{.lower = {}, .upper = {}, .params = f.params(), .target = x};
  for (const auto& [a, image] : f.assignment()) {
    const EdgeSet& edges = k(a);
    if (is_subset(image, x)) s.lower.insert(edges.begin(), edges.end());
    if (intersects(image, x)) s.upper.insert(edges.begin(), edges.end());
  }
  return s;
}

}  // namespace srg
