#include "srg/soft_rough_graph.hpp"

namespace srg {

namespace {

SimpleGraph subgraph_of(const SimpleGraph& host, const VertexSet& vertices, const EdgeSet& edges) {
  EdgeMap selected;
  for (const auto& e : edges) selected.emplace(e, host.endpoints(e));
  return SimpleGraph(vertices, std::move(selected));
}

void require_same_host(const SoftRoughGraph& a, const SoftRoughGraph& b, std::string_view what) {
  if (a.host_ptr() != b.host_ptr() && a.host() != b.host())
    throw PreconditionError(std::string(what) + ": operands are built over different host graphs");
}

}  // namespace

SoftRoughGraph assemble_soft_rough_graph(SoftSet f, RelationSpec rel, const VertexSet& x) {
  SoftRoughGraph srg(std::move(f), std::move(rel));
  const SoftSet& soft = srg.soft_set_;
  EdgeSoftSet k = edge_soft_set(soft.host(), soft);
  srg.edge_images_ = k.assignment();
  srg.vertex_approx_ = vertex_approx(soft, x);
  srg.edge_approx_ = edge_approx(k, soft, x);

  const SimpleGraph& host = soft.host();
  const auto& vs = srg.vertex_approx_;
  const auto& es = srg.edge_approx_;
  if (!endpoint_closed(host, vs.lower, es.lower) || !endpoint_closed(host, vs.upper, es.upper))
    throw InvariantViolation("approximation subgraphs are not endpoint-closed");
  srg.lower_ = subgraph_of(host, vs.lower, es.lower);
  srg.upper_ = subgraph_of(host, vs.upper, es.upper);

  if (!is_subset(vs.lower, x)) throw InvariantViolation("lower vertex approximation is not inside the target");
  if (!is_subgraph(srg.lower_, srg.upper_)) throw InvariantViolation("H_* is not a subgraph of H^*");
  if (!is_subgraph(srg.upper_, host)) throw InvariantViolation("H^* is not a subgraph of the host");
  return srg;
}

SoftRoughGraph build_soft_rough_graph(GraphPtr g, const ParameterSet& a, const RelationSpec& rel, const VertexSet& x) {
  if (a.empty()) throw PreconditionError("soft rough graph needs a non-empty set of parameters");
  if (x.empty()) throw PreconditionError("soft rough graph needs a non-empty subset of vertices as target");
  for (const auto& v : x)
    if (!g->has_vertex(v)) throw LookupError("target vertex " + v.str() + " is not in the host graph");
  SoftSet f = build_soft_set(std::move(g), a, rel);
  return assemble_soft_rough_graph(std::move(f), rel, x);
}

std::vector<std::pair<ParameterId, SimpleGraph>> build_soft_graph(const SimpleGraph& g, const SoftSet& f) {
  EdgeSoftSet k = edge_soft_set(g, f);
  std::vector<std::pair<ParameterId, SimpleGraph>> out;
  for (const auto& [a, image] : f.assignment()) {
    SimpleGraph h = subgraph_of(g, image, k(a));
    if (!is_subgraph(h, g)) throw InvariantViolation("H(" + a.str() + ") is not a subgraph of the host");
    out.emplace_back(a, std::move(h));
  }
  return out;
}

InducedFlags classify_induced(const SoftRoughGraph& srg) {
  const SimpleGraph& host = srg.host();
  return {
      .lower_vertex_induced = srg.lower() == induced_subgraph(host, srg.lower().vertices()),
      .upper_vertex_induced = srg.upper() == induced_subgraph(host, srg.upper().vertices()),
      .lower_edge_induced = srg.lower() == edge_induced_subgraph(host, srg.lower().edge_ids()),
      .upper_edge_induced = srg.upper() == edge_induced_subgraph(host, srg.upper().edge_ids()),
  };
}

SubgraphReport is_soft_rough_subgraph(const SoftRoughGraph& candidate, const SoftRoughGraph& parent) {
  require_same_host(candidate, parent, "soft rough subgraph test");
  SubgraphReport r;
  r.params_nested = is_subset(candidate.params(), parent.params());
  r.lower_subgraph = is_subgraph(candidate.lower(), parent.lower());
  r.upper_subgraph = is_subgraph(candidate.upper(), parent.upper());
  r.same_target = candidate.target() == parent.target();

  const auto& cv = candidate.vertex_approx();
  const auto& pv = parent.vertex_approx();
  const auto& ce = candidate.edge_approx();
  const auto& pe = parent.edge_approx();
  r.vertex_lower_contained = is_subset(cv.lower, pv.lower);
  r.vertex_upper_contained = is_subset(cv.upper, pv.upper);
  r.edge_lower_contained = is_subset(ce.lower, pe.lower);
  r.edge_upper_contained = is_subset(ce.upper, pe.upper);

  if (r.params_nested && r.verdict() != r.containment_verdict())
    throw InvariantViolation("soft rough subgraph verdict disagrees with the four-containment characterisation");
  return r;
}

bool is_soft_rough_tree(const SoftRoughGraph& srg) { return is_tree(srg.lower()) && is_tree(srg.upper()); }

std::string_view to_string(CombineMode mode) { return mode == CombineMode::and_mode ? "and" : "or"; }

CombineMode parse_combine_mode(std::string_view text) {
  if (text == "and") return CombineMode::and_mode;
  if (text == "or") return CombineMode::or_mode;
  throw PreconditionError("unknown combine mode '" + std::string(text) + "' (expected and or or)");
}

ApproximationSets approximation_sets(const SoftRoughGraph& srg) {
  return {srg.vertex_approx().lower, srg.edge_approx().lower, srg.vertex_approx().upper, srg.edge_approx().upper};
}

CombineResult combine_sets(const SimpleGraph& host, const ApproximationSets& s1, const ApproximationSets& s2,
                           CombineMode mode) {
  auto op = [mode](const auto& a, const auto& b) {
    return mode == CombineMode::and_mode ? set_intersection(a, b) : set_union(a, b);
  };
  CombineResult r;
  r.mode = mode;
  r.sets.lower_vertices = op(s1.lower_vertices, s2.lower_vertices);
  r.sets.lower_edges = op(s1.lower_edges, s2.lower_edges);
  r.sets.upper_vertices = op(s1.upper_vertices, s2.upper_vertices);
  r.sets.upper_edges = op(s1.upper_edges, s2.upper_edges);
  r.lower_well_formed = endpoint_closed(host, r.sets.lower_vertices, r.sets.lower_edges);
  r.upper_well_formed = endpoint_closed(host, r.sets.upper_vertices, r.sets.upper_edges);
  return r;
}

CombineResult combine(const SoftRoughGraph& s1, const SoftRoughGraph& s2, CombineMode mode) {
  require_same_host(s1, s2, "combine");
  CombineResult r = combine_sets(s1.host(), approximation_sets(s1), approximation_sets(s2), mode);
  for (const auto& a : s1.params())
    for (const auto& b : s2.params()) r.params.emplace_back(a, b);
  for (const auto& x : s1.target())
    for (const auto& y : s2.target()) r.target.emplace_back(x, y);
  return r;
}

SoftRoughProduct srg_product(const SoftRoughGraph& s1, const SoftRoughGraph& s2, ProductKind kind) {
  if (kind == ProductKind::corona) {
    if (s1.lower().empty())
      throw PreconditionError("corona product of soft rough graphs is degenerate: the first operand's H_* is empty");
    if (s1.upper().empty())
      throw PreconditionError("corona product of soft rough graphs is degenerate: the first operand's H^* is empty");
  }
  SoftRoughProduct p;
  p.kind = kind;
  p.host_product = product(s1.host(), s2.host(), kind);
  p.lower = product(s1.lower(), s2.lower(), kind);
  p.upper = product(s1.upper(), s2.upper(), kind);
  p.lower_in_host = is_subgraph(p.lower, p.host_product);
  p.upper_in_host = is_subgraph(p.upper, p.host_product);
  return p;
}

}  // namespace srg
