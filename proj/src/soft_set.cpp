#include "srg/soft_set.hpp"

#include <string>

namespace srg {

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::open_neighborhood: return "open-neighborhood";
    case RelationKind::closed_neighborhood: return "closed-neighborhood";
    case RelationKind::diameter_distance: return "diameter-distance";
    case RelationKind::explicit_table: return "explicit";
  }
  return "?";
}

RelationKind parse_relation_kind(std::string_view text) {
  for (auto kind : {RelationKind::open_neighborhood, RelationKind::closed_neighborhood, RelationKind::diameter_distance,
                    RelationKind::explicit_table})
    if (to_string(kind) == text) return kind;
  throw PreconditionError("unknown relation kind '" + std::string(text) +
                          "' (expected open-neighborhood, closed-neighborhood, diameter-distance or explicit)");
}

SoftSet::SoftSet(GraphPtr host, std::map<ParameterId, VertexSet> assignment)
    : host_(std::move(host)), assignment_(std::move(assignment)) {
  if (!host_) throw PreconditionError("soft set needs a host graph");
  for (const auto& [a, image] : assignment_) {
    params_.insert(params_.end(), a);
    for (const auto& v : image)
      if (!host_->has_vertex(v))
        throw LookupError("soft set: F(" + a.str() + ") contains " + v.str() + " which is not a vertex of the host");
  }
}

const VertexSet& SoftSet::operator()(const ParameterId& a) const {
  auto it = assignment_.find(a);
  if (it == assignment_.end()) throw LookupError("parameter " + a.str() + " is not in the soft set");
  return it->second;
}

const EdgeSet& EdgeSoftSet::operator()(const ParameterId& a) const {
  auto it = assignment_.find(a);
  if (it == assignment_.end()) throw LookupError("parameter " + a.str() + " is not in the edge soft set");
  return it->second;
}

bool EdgeSoftSet::derived_from(const SoftSet& f) const { return host_ == &f.host() && params_ == f.params(); }

SoftSet build_soft_set(GraphPtr g, const ParameterSet& a, const RelationSpec& rel) {
  if (!g) throw PreconditionError("build_soft_set: null host");
  std::map<ParameterId, VertexSet> assignment;

  if (rel.kind == RelationKind::explicit_table) {
    for (const auto& [p, image] : rel.table)
      for (const auto& v : image)
        if (!g->has_vertex(v))
          throw LookupError("explicit relation row " + p.str() + " references unknown vertex " + v.str());
    for (const auto& p : a) {
      auto it = rel.table.find(p);
      if (it == rel.table.end()) throw LookupError("explicit relation has no row for parameter " + p.str());
      assignment.emplace(p, it->second);
    }
    return SoftSet(std::move(g), std::move(assignment));
  }

  for (const auto& p : a)
    if (!g->has_vertex(VertexId(p.str())))
      throw LookupError("parameter " + p.str() + " is not a vertex of the host graph (required by the " +
                        std::string(to_string(rel.kind)) + " relation)");

  switch (rel.kind) {
    case RelationKind::open_neighborhood:
    case RelationKind::closed_neighborhood:
      for (const auto& p : a)
        assignment.emplace(p, neighborhood(*g, VertexId(p.str()), rel.kind == RelationKind::closed_neighborhood));
      break;
    case RelationKind::diameter_distance: {
      auto table = distance_and_diameter(*g);
      if (table.infinite)
        throw PreconditionError("diameter-distance relation needs a connected host graph; the diameter is infinite");
      for (const auto& p : a) {
        VertexSet image;
        for (const auto& y : g->vertices())
          if (table.distance(VertexId(p.str()), y) == table.diameter) image.insert(y);
        assignment.emplace(p, std::move(image));
      }
      break;
    }
    case RelationKind::explicit_table: break;
  }
  return SoftSet(std::move(g), std::move(assignment));
}

EdgeSoftSet edge_soft_set(const SimpleGraph& g, const SoftSet& f) {
  if (&g != &f.host() && g != f.host()) throw PreconditionError("edge_soft_set: soft set was built over another graph");
  EdgeSoftSet k;
  k.host_ = &f.host();
  k.params_ = f.params();
  for (const auto& [a, image] : f.assignment()) {
    EdgeSet inside;
    for (const auto& [label, ends] : g.edges())
      if (image.contains(ends.low) && image.contains(ends.high)) inside.insert(inside.end(), label);
    k.assignment_.emplace(a, std::move(inside));
  }
  return k;
}

}  // namespace srg
