#include "srg/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>

namespace srg {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      checks::kLowerSubsetUpperVertex, checks::kLowerSubsetUpperEdge, checks::kVertexLowerInTarget,
      checks::kTargetInCoveredUpper,   checks::kMonotoneInTarget,     checks::kMonotoneInParams,
      checks::kEndpointClosure,        checks::kSubgraphChain,        checks::kOracleAgreement,
      checks::kSubgraphIff,            checks::kSubgraphIffUnrestricted, checks::kTreeHostAcyclic,
      checks::kTreeHostTree,           checks::kTreeSubAcyclic,    checks::kTreeSubTree,
      checks::kOrWellFormed,           checks::kAndWellFormedFlag,
  };
  return names;
}

std::set<std::string> default_checks() { return {known_checks().begin(), known_checks().end()}; }

bool is_observation(const std::string& check) {
  return check == checks::kSubgraphIffUnrestricted || check == checks::kTreeHostTree ||
         check == checks::kTreeSubTree || check == "product.corona";
}

bool CensusReport::passed() const {
  return std::all_of(per_check.begin(), per_check.end(),
                     [](const auto& kv) { return kv.second.observation || kv.second.failures == 0; });
}

namespace {

using VMask = std::uint32_t;
using EMask = std::uint64_t;

constexpr std::size_t kMaskLimit = 20;

/// Index space for the bitmask oracle. Vertices, edges and parameters are
/// numbered in label order.
struct Universe {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<std::pair<unsigned, unsigned>> edge_ends;
  std::vector<ParameterId> params;
  std::vector<VMask> image;  // F(p) for every parameter of the universe
  std::map<VertexId, unsigned> vertex_index;
  std::map<EdgeId, unsigned> edge_index;

  VMask vmask(const VertexSet& s) const {
    VMask m = 0;
    for (const auto& v : s) m |= VMask{1} << vertex_index.at(v);
    return m;
  }
  EMask emask(const EdgeSet& s) const {
    EMask m = 0;
    for (const auto& e : s) m |= EMask{1} << edge_index.at(e);
    return m;
  }
  VertexSet vset(VMask m) const {
    VertexSet s;
    for (unsigned i = 0; i < vertices.size(); ++i)
      if (m >> i & 1) s.insert(s.end(), vertices[i]);
    return s;
  }
  ParameterSet pset(VMask m) const {
    ParameterSet s;
    for (unsigned i = 0; i < params.size(); ++i)
      if (m >> i & 1) s.insert(s.end(), params[i]);
    return s;
  }
  bool closed(VMask v, EMask e) const {
    for (unsigned j = 0; j < edges.size(); ++j)
      if (e >> j & 1) {
        auto [a, b] = edge_ends[j];
        if (!(v >> a & 1) || !(v >> b & 1)) return false;
      }
    return true;
  }
};

Universe make_universe(const SimpleGraph& host, const RelationSpec& rel) {
  Universe u;
  u.vertices.assign(host.vertices().begin(), host.vertices().end());
  for (unsigned i = 0; i < u.vertices.size(); ++i) u.vertex_index.emplace(u.vertices[i], i);
  for (const auto& [label, ends] : host.edges()) {
    u.edge_index.emplace(label, static_cast<unsigned>(u.edges.size()));
    u.edges.push_back(label);
    u.edge_ends.emplace_back(u.vertex_index.at(ends.low), u.vertex_index.at(ends.high));
  }
  if (rel.kind == RelationKind::explicit_table) {
    for (const auto& [p, image] : rel.table) u.params.push_back(p);
  } else {
    for (const auto& v : u.vertices) u.params.emplace_back(v.str());
  }
  return u;
}

struct Masks {
  VMask vertex_lower = 0;
  VMask vertex_upper = 0;
  EMask edge_lower = 0;
  EMask edge_upper = 0;

  friend bool operator==(const Masks&, const Masks&) = default;

  bool within(const Masks& o) const {
    return (vertex_lower & ~o.vertex_lower) == 0 && (vertex_upper & ~o.vertex_upper) == 0 &&
           (edge_lower & ~o.edge_lower) == 0 && (edge_upper & ~o.edge_upper) == 0;
  }
};

/// Direct evaluation of the defining quantifiers, element by element:
///   u ∈ F_*(X) ⟺ ∃a ∈ A: u ∈ F(a) ∧ F(a) ⊆ X
///   u ∈ F^*(X) ⟺ ∃a ∈ A: u ∈ F(a) ∧ F(a) ∩ X ≠ ∅
///   e ∈ K_*(X) ⟺ ∃a ∈ A: e ⊆ F(a) ∧ F(a) ⊆ X
///   e ∈ K^*(X) ⟺ ∃a ∈ A: e ⊆ F(a) ∧ F(a) ∩ X ≠ ∅
Masks quantifier_oracle(const Universe& u, VMask params, VMask target) {
  Masks m;
  auto exists = [&](auto&& member, bool lower) {
    for (unsigned a = 0; a < u.params.size(); ++a) {
      if (!(params >> a & 1)) continue;
      VMask fa = u.image[a];
      bool condition = lower ? (fa & ~target) == 0 : (fa & target) != 0;
      if (condition && member(fa)) return true;
    }
    return false;
  };
  for (unsigned i = 0; i < u.vertices.size(); ++i) {
    auto member = [i](VMask fa) { return (fa >> i & 1) != 0; };
    if (exists(member, true)) m.vertex_lower |= VMask{1} << i;
    if (exists(member, false)) m.vertex_upper |= VMask{1} << i;
  }
  for (unsigned j = 0; j < u.edges.size(); ++j) {
    auto [p, q] = u.edge_ends[j];
    auto member = [p, q](VMask fa) { return (fa >> p & 1) && (fa >> q & 1); };
    if (exists(member, true)) m.edge_lower |= EMask{1} << j;
    if (exists(member, false)) m.edge_upper |= EMask{1} << j;
  }
  return m;
}

struct Entry {
  SoftRoughGraph srg;
  Masks lib;
};

class Tallies {
 public:
  Tallies(CensusReport& report, const std::set<std::string>& enabled) : report_(report), enabled_(enabled) {
    for (const auto& name : enabled_) report_.per_check[name].observation = is_observation(name);
  }

  bool enabled(const char* name) const { return enabled_.contains(name); }

  void pass(const char* name) { report_.per_check[name].passes++; }
  void skip(const char* name) { report_.per_check[name].skipped++; }
  void fail(const char* name, Instance instance) {
    auto& t = report_.per_check[name];
    t.failures++;
    if (t.counterexamples.size() < kMaxRecordedCounterexamples) t.counterexamples.push_back(std::move(instance));
  }

 private:
  CensusReport& report_;
  const std::set<std::string>& enabled_;
};

std::string describe(const Masks& m, const Universe& u) {
  std::ostringstream os;
  os << "lower=" << to_string(u.vset(m.vertex_lower)) << " upper=" << to_string(u.vset(m.vertex_upper));
  EdgeSet el, eu;
  for (unsigned j = 0; j < u.edges.size(); ++j) {
    if (m.edge_lower >> j & 1) el.insert(u.edges[j]);
    if (m.edge_upper >> j & 1) eu.insert(u.edges[j]);
  }
  os << " edge_lower=" << to_string(el) << " edge_upper=" << to_string(eu);
  return os.str();
}

}  // namespace

CensusReport run_census(const CensusConfig& cfg) {
  if (!cfg.host) throw PreconditionError("census needs a host graph");
  const SimpleGraph& host = *cfg.host;
  if (host.order() > cfg.vertex_cap)
    throw PreconditionError("census host has " + std::to_string(host.order()) + " vertices; the enumeration cap is " +
                            std::to_string(cfg.vertex_cap));
  for (const auto& name : cfg.checks)
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
      throw PreconditionError("unknown census check '" + name + "'");

  Universe u = make_universe(host, cfg.relation);
  if (u.vertices.size() + u.params.size() > 2 * kDefaultVertexCap + 4 || u.edges.size() > 63)
    throw PreconditionError("census universe too large for exhaustive enumeration");
  const std::size_t max_params = cfg.max_params.value_or(u.params.size());
  if (max_params > u.params.size())
    throw PreconditionError("maxParams " + std::to_string(max_params) + " exceeds the " +
                            std::to_string(u.params.size()) + " available parameters");

  SoftSet full = build_soft_set(cfg.host, u.pset((VMask{1} << u.params.size()) - 1), cfg.relation);
  for (const auto& p : u.params) u.image.push_back(u.vmask(full(p)));

  const unsigned n = static_cast<unsigned>(u.vertices.size());
  const unsigned np = static_cast<unsigned>(u.params.size());
  const VMask all_x = (VMask{1} << n) - 1;
  auto params_enumerated = [&](VMask a) {
    return (a != 0 || cfg.include_empty) && static_cast<std::size_t>(std::popcount(a)) <= max_params;
  };
  auto target_enumerated = [&](VMask x) { return x != 0 || cfg.include_empty; };

  CensusReport report;
  {
    std::ostringstream os;
    os << "host |V|=" << host.order() << " |E|=" << host.size() << ", relation " << to_string(cfg.relation.kind)
       << ", |A| <= " << max_params << (cfg.include_empty ? ", empty sets included" : "");
    report.subject = os.str();
  }
  Tallies tally(report, cfg.checks);

  // Library results for every enumerated instance, indexed by (A << n) | X.
  std::vector<std::optional<Entry>> table(std::size_t{1} << (np + n));
  auto at = [&](VMask a, VMask x) -> const std::optional<Entry>& { return table[(std::size_t{a} << n) | x]; };

  for (VMask a = 0; a < (VMask{1} << np); ++a) {
    if (!params_enumerated(a)) continue;
    SoftSet f = build_soft_set(cfg.host, u.pset(a), cfg.relation);
    for (VMask x = 0; x <= all_x; ++x) {
      if (!target_enumerated(x)) continue;
      SoftRoughGraph srg = assemble_soft_rough_graph(f, cfg.relation, u.vset(x));
      Masks lib{u.vmask(srg.vertex_approx().lower), u.vmask(srg.vertex_approx().upper),
                u.emask(srg.edge_approx().lower), u.emask(srg.edge_approx().upper)};
      table[(std::size_t{a} << n) | x] = Entry{std::move(srg), lib};
    }
  }

  const bool host_is_tree = is_tree(host);

  for (VMask a = 0; a < (VMask{1} << np); ++a) {
    if (!params_enumerated(a)) continue;
    for (VMask x = 0; x <= all_x; ++x) {
      if (!target_enumerated(x)) continue;
      const Entry& entry = *at(a, x);
      const SoftRoughGraph& srg = entry.srg;
      const Masks& lib = entry.lib;
      report.instance_count++;

      auto instance = [&](std::string detail) {
        return Instance{u.pset(a), u.vset(x), std::nullopt, std::nullopt, std::move(detail)};
      };
      auto record = [&](const char* name, bool ok, auto&& detail) {
        if (!tally.enabled(name)) return;
        if (ok)
          tally.pass(name);
        else
          tally.fail(name, instance(detail()));
      };

      auto& stats = report.definability[to_string(u.pset(a))];
      (is_definable(srg.vertex_approx()) ? stats.definable : stats.rough)++;

      record(checks::kLowerSubsetUpperVertex, (lib.vertex_lower & ~lib.vertex_upper) == 0,
             [&] { return describe(lib, u); });
      record(checks::kLowerSubsetUpperEdge, (lib.edge_lower & ~lib.edge_upper) == 0, [&] { return describe(lib, u); });
      record(checks::kVertexLowerInTarget, (lib.vertex_lower & ~x) == 0, [&] { return describe(lib, u); });

      if (tally.enabled(checks::kTargetInCoveredUpper)) {
        VMask covered = 0;
        for (const auto& [p, image] : srg.soft_set().assignment()) {
          VMask fm = u.vmask(image);
          if (fm & x) covered |= fm;
        }
        bool applies = (x & ~covered) == 0;
        record(checks::kTargetInCoveredUpper, !applies || (x & ~lib.vertex_upper) == 0,
               [&] { return describe(lib, u); });
      }

      if (tally.enabled(checks::kMonotoneInTarget)) {
        std::string bad;
        for (unsigned v = 0; v < n && bad.empty(); ++v)
          if (!(x >> v & 1) && !lib.within(at(a, x | VMask{1} << v)->lib))
            bad = "not monotone when adding " + u.vertices[v].str() + " to X";
        record(checks::kMonotoneInTarget, bad.empty(), [&] { return bad; });
      }

      if (tally.enabled(checks::kMonotoneInParams)) {
        std::string bad;
        for (unsigned p = 0; p < np && bad.empty(); ++p) {
          VMask bigger = a | VMask{1} << p;
          if (bigger == a || !params_enumerated(bigger)) continue;
          if (!lib.within(at(bigger, x)->lib)) bad = "not monotone when adding " + u.params[p].str() + " to A";
        }
        record(checks::kMonotoneInParams, bad.empty(), [&] { return bad; });
      }

      record(checks::kEndpointClosure,
             u.closed(lib.vertex_lower, lib.edge_lower) && u.closed(lib.vertex_upper, lib.edge_upper),
             [&] { return describe(lib, u); });
      record(checks::kSubgraphChain, is_subgraph(srg.lower(), srg.upper()) && is_subgraph(srg.upper(), host),
             [&] { return describe(lib, u); });

      if (tally.enabled(checks::kOracleAgreement)) {
        Masks expected = quantifier_oracle(u, a, x);
        record(checks::kOracleAgreement, expected == lib,
               [&] { return "library " + describe(lib, u) + " | oracle " + describe(expected, u); });
      }

      if (tally.enabled(checks::kSubgraphIff)) {
        std::string bad;
        // Every enumerated B ⊆ A, including A itself.
        for (VMask b = a;; b = (b - 1) & a) {
          if (params_enumerated(b) && bad.empty()) {
            try {
              SubgraphReport r = is_soft_rough_subgraph(at(b, x)->srg, srg);
              if (r.verdict() != r.containment_verdict()) bad = "B=" + to_string(u.pset(b)) + ": verdicts differ";
            } catch (const InvariantViolation& e) {
              bad = "B=" + to_string(u.pset(b)) + ": " + e.what();
            }
          }
          if (b == 0) break;
        }
        record(checks::kSubgraphIff, bad.empty(), [&] { return bad; });
      }

      if (tally.enabled(checks::kSubgraphIffUnrestricted)) {
        std::optional<Instance> bad;
        bool any = false;
        for (unsigned p = 0; p < np && !bad; ++p) {
          VMask b = VMask{1} << p;
          if ((a & b) || !params_enumerated(b)) continue;
          any = true;
          SubgraphReport r = is_soft_rough_subgraph(at(b, x)->srg, srg);
          if (r.verdict() != r.containment_verdict()) {
            bad = instance("B=" + to_string(u.pset(b)) + " is not inside A, yet all four containments hold");
            bad->second_params = u.pset(b);
            bad->second_target = u.vset(x);
          }
        }
        if (!any)
          tally.skip(checks::kSubgraphIffUnrestricted);
        else if (bad)
          tally.fail(checks::kSubgraphIffUnrestricted, std::move(*bad));
        else
          tally.pass(checks::kSubgraphIffUnrestricted);
      }

      if (tally.enabled(checks::kTreeHostAcyclic)) {
        if (!host_is_tree)
          tally.skip(checks::kTreeHostAcyclic);
        else
          record(checks::kTreeHostAcyclic, is_acyclic(srg.lower()) && is_acyclic(srg.upper()),
                 [&] { return describe(lib, u); });
      }
      if (tally.enabled(checks::kTreeHostTree)) {
        if (!host_is_tree)
          tally.skip(checks::kTreeHostTree);
        else
          record(checks::kTreeHostTree, is_soft_rough_tree(srg), [&] {
            return std::string(is_tree(srg.lower()) ? "" : "H_* is not a tree; ") +
                   (is_tree(srg.upper()) ? "" : "H^* is not a tree; ") + describe(lib, u);
          });
      }

      if (tally.enabled(checks::kTreeSubAcyclic) || tally.enabled(checks::kTreeSubTree)) {
        if (!is_soft_rough_tree(srg)) {
          if (tally.enabled(checks::kTreeSubAcyclic)) tally.skip(checks::kTreeSubAcyclic);
          if (tally.enabled(checks::kTreeSubTree)) tally.skip(checks::kTreeSubTree);
        } else {
          std::string not_acyclic, not_tree;
          for (VMask b = (a - 1) & a; b != 0; b = (b - 1) & a) {
            const SoftRoughGraph& sub = at(b, x)->srg;
            if (not_acyclic.empty() && !(is_acyclic(sub.lower()) && is_acyclic(sub.upper())))
              not_acyclic = "sub-soft-rough-graph B=" + to_string(u.pset(b)) + " has a cycle";
            if (not_tree.empty() && !is_soft_rough_tree(sub))
              not_tree = "sub-soft-rough-graph B=" + to_string(u.pset(b)) + " is not a soft rough tree";
          }
          record(checks::kTreeSubAcyclic, not_acyclic.empty(), [&] { return not_acyclic; });
          record(checks::kTreeSubTree, not_tree.empty(), [&] { return not_tree; });
        }
      }

      if (tally.enabled(checks::kOrWellFormed) || tally.enabled(checks::kAndWellFormedFlag)) {
        std::string or_bad, and_bad;
        bool any = false;
        for (unsigned v = 0; v < n; ++v) {
          VMask x2 = x ^ VMask{1} << v;
          if (!target_enumerated(x2)) continue;
          any = true;
          const Entry& other = *at(a, x2);
          CombineResult r_or = combine(srg, other.srg, CombineMode::or_mode);
          if (or_bad.empty() && !(r_or.lower_well_formed && r_or.upper_well_formed))
            or_bad = "OR with X'=" + to_string(u.vset(x2)) + " is not well-formed";

          CombineResult r_and = combine(srg, other.srg, CombineMode::and_mode);
          bool lower_expected = u.closed(lib.vertex_lower & other.lib.vertex_lower, lib.edge_lower & other.lib.edge_lower);
          bool upper_expected = u.closed(lib.vertex_upper & other.lib.vertex_upper, lib.edge_upper & other.lib.edge_upper);
          report.counters[std::string("and.lower_well_formed=") + (r_and.lower_well_formed ? "true" : "false")]++;
          report.counters[std::string("and.upper_well_formed=") + (r_and.upper_well_formed ? "true" : "false")]++;
          if (and_bad.empty() && (r_and.lower_well_formed != lower_expected || r_and.upper_well_formed != upper_expected))
            and_bad = "AND flag with X'=" + to_string(u.vset(x2)) + " disagrees with recomputation";
        }
        for (const char* name : {checks::kOrWellFormed, checks::kAndWellFormedFlag}) {
          if (!tally.enabled(name)) continue;
          const std::string& bad = name == checks::kOrWellFormed ? or_bad : and_bad;
          if (!any)
            tally.skip(name);
          else
            record(name, bad.empty(), [&] { return bad; });
        }
      }
    }
  }
  return report;
}

std::vector<SoftRoughGraph> enumerate_soft_rough_graphs(const GraphPtr& host, const RelationSpec& rel,
                                                        std::optional<std::size_t> max_params) {
  Universe u = make_universe(*host, rel);
  if (u.vertices.size() > kMaskLimit || u.params.size() > kMaskLimit)
    throw PreconditionError("host too large for exhaustive enumeration");
  const std::size_t limit = max_params.value_or(u.params.size());
  std::vector<SoftRoughGraph> out;
  for (VMask a = 1; a < (VMask{1} << u.params.size()); ++a) {
    if (static_cast<std::size_t>(std::popcount(a)) > limit) continue;
    SoftSet f = build_soft_set(host, u.pset(a), rel);
    for (VMask x = 1; x < (VMask{1} << u.vertices.size()); ++x)
      out.push_back(assemble_soft_rough_graph(f, rel, u.vset(x)));
  }
  return out;
}

CensusReport verify_product_theorems(const std::vector<std::pair<SoftRoughGraph, SoftRoughGraph>>& pairs,
                                     const std::set<ProductKind>& kinds) {
  CensusReport report;
  report.subject = std::to_string(pairs.size()) + " soft rough graph pairs";
  for (auto kind : kinds) {
    std::string name = "product." + std::string(to_string(kind));
    report.per_check[name].observation = is_observation(name);
  }
  for (const auto& [s1, s2] : pairs) {
    report.instance_count++;
    for (auto kind : kinds) {
      std::string name = "product." + std::string(to_string(kind));
      auto& t = report.per_check[name];
      auto instance = [&](std::string detail) {
        return Instance{s1.params(), s1.target(), s2.params(), s2.target(), std::move(detail)};
      };
      try {
        SoftRoughProduct p = srg_product(s1, s2, kind);
        if (p.verified()) {
          t.passes++;
        } else {
          t.failures++;
          std::string detail = std::string(p.lower_in_host ? "" : "lower product not in host product; ") +
                               (p.upper_in_host ? "" : "upper product not in host product; ") +
                               "vertex ordering: lexicographic by label";
          if (t.counterexamples.size() < kMaxRecordedCounterexamples) t.counterexamples.push_back(instance(detail));
        }
      } catch (const PreconditionError& e) {
        t.skipped++;
        report.counters[name + ".precondition: " + e.what()]++;
      }
    }
  }
  return report;
}

namespace {

std::vector<std::pair<unsigned, unsigned>> decode_pruefer(const std::vector<unsigned>& seq, unsigned n) {
  std::vector<unsigned> degree(n, 1);
  for (unsigned s : seq) degree[s]++;
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned s : seq) {
    for (unsigned leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, s);
        degree[leaf]--;
        degree[s]--;
        break;
      }
  }
  unsigned u = n, w = n;
  for (unsigned i = 0; i < n; ++i)
    if (degree[i] == 1) (u == n ? u : w) = i;
  edges.emplace_back(u, w);
  return edges;
}

/// Canonical string of an unrooted tree: AHU encoding rooted at the centre,
/// minimised over both centres for bicentral trees.
std::string canonical_tree(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
  std::vector<std::vector<unsigned>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<unsigned> degree(n);
  std::vector<unsigned> layer;
  for (unsigned i = 0; i < n; ++i) {
    degree[i] = static_cast<unsigned>(adj[i].size());
    if (degree[i] <= 1) layer.push_back(i);
  }
  unsigned remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<unsigned>(layer.size());
    std::vector<unsigned> next;
    for (unsigned leaf : layer)
      for (unsigned w : adj[leaf])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::function<std::string(unsigned, unsigned)> encode = [&](unsigned v, unsigned parent) {
    std::vector<std::string> kids;
    for (unsigned w : adj[v])
      if (w != parent) kids.push_back(encode(w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
  };
  std::string best;
  for (unsigned centre : layer) {
    std::string s = encode(centre, n);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<SimpleGraph> trees_of_order(std::size_t n) {
  if (n == 0) throw PreconditionError("trees_of_order: the empty graph is not a tree");
  if (n > 9) throw PreconditionError("trees_of_order: enumeration is limited to 9 vertices");
  auto label = [](unsigned i) { return "t" + std::to_string(i); };
  auto to_graph = [&](const std::vector<std::pair<unsigned, unsigned>>& edges) {
    VertexSet vs;
    for (unsigned i = 0; i < n; ++i) vs.insert(VertexId(label(i)));
    EdgeMap es;
    std::vector<std::pair<unsigned, unsigned>> sorted;
    for (auto [a, b] : edges) sorted.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(sorted.begin(), sorted.end());
    for (unsigned j = 0; j < sorted.size(); ++j)
      es.emplace(EdgeId("e" + std::to_string(j)), Endpoints(label(sorted[j].first), label(sorted[j].second)));
    return SimpleGraph(std::move(vs), std::move(es));
  };
  const auto nn = static_cast<unsigned>(n);
  if (nn == 1) return {to_graph({})};
  if (nn == 2) return {to_graph({{0, 1}})};

  std::map<std::string, std::vector<std::pair<unsigned, unsigned>>> classes;
  std::vector<unsigned> seq(nn - 2, 0);
  while (true) {
    auto edges = decode_pruefer(seq, nn);
    classes.emplace(canonical_tree(nn, edges), edges);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == nn) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<SimpleGraph> out;
  for (const auto& [key, edges] : classes) out.push_back(to_graph(edges));
  return out;
}

std::string format_summary(const CensusReport& report) {
  std::ostringstream os;
  os << "census: " << report.subject << "\n";
  os << "instances: " << report.instance_count << "\n";
  os << std::left << std::setw(30) << "check" << std::right << std::setw(10) << "passes" << std::setw(10)
     << "failures" << std::setw(10) << "skipped" << "  kind\n";
  for (const auto& [name, t] : report.per_check) {
    os << std::left << std::setw(30) << name << std::right << std::setw(10) << t.passes << std::setw(10) << t.failures
       << std::setw(10) << t.skipped << "  " << (t.observation ? "observation" : "check") << "\n";
    if (const Instance* ce = t.first_counterexample()) {
      os << "    first counterexample: A=" << to_string(ce->params) << " X=" << to_string(ce->target);
      if (ce->second_params) os << " B=" << to_string(*ce->second_params);
      if (ce->second_target) os << " Y=" << to_string(*ce->second_target);
      os << " :: " << ce->detail << "\n";
    }
  }
  for (const auto& [name, count] : report.counters) os << "  " << name << ": " << count << "\n";
  os << (report.passed() ? "RESULT: all checks passed" : "RESULT: FAILURES") << "\n";
  return os.str();
}

}  // namespace srg
