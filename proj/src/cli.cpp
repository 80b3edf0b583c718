#include "srg/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "srg/io.hpp"

namespace srg::cli {

namespace {

using io::json;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::DocumentError(path + ": cannot open for writing");
  out << text;
}

io::RunSpec load_spec(const std::string& path) { return io::run_spec_from_json(io::read_document(path)); }

/// Second operand: an explicit file, or the "second" block of the first file.
io::RunSpec second_operand(const io::RunSpec& first, const std::optional<std::string>& path, std::string_view cmd) {
  if (path) return load_spec(*path);
  if (!first.second)
    throw io::DocumentError(std::string(cmd) + ": needs a second spec file or a 'second' block in the first");
  return *first.second;
}

json sets_json(const auto& rough) {
  json lower = json::array(), upper = json::array();
  for (const auto& x : rough.lower) lower.push_back(x.str());
  for (const auto& x : rough.upper) upper.push_back(x.str());
  return json{{"lower", lower}, {"upper", upper}, {"definable", is_definable(rough)}};
}

int cmd_approx(const std::string& path, std::ostream& out) {
  io::RunSpec spec = load_spec(path);
  SoftSet f = build_soft_set(spec.graph, spec.params, spec.relation);
  EdgeSoftSet k = edge_soft_set(f.host(), f);
  auto va = vertex_approx(f, spec.target);
  auto ea = edge_approx(k, f, spec.target);
  json soft = json::object(), edge_soft = json::object();
  for (const auto& [p, image] : f.assignment()) {
    json items = json::array();
    for (const auto& v : image) items.push_back(v.str());
    soft[p.str()] = items;
  }
  for (const auto& [p, image] : k.assignment()) {
    json items = json::array();
    for (const auto& e : image) items.push_back(e.str());
    edge_soft[p.str()] = items;
  }
  json target = json::array();
  for (const auto& v : spec.target) target.push_back(v.str());
  out << io::dump(json{{"target", target},
                       {"softSet", soft},
                       {"edgeSoftSet", edge_soft},
                       {"vertexApproximation", sets_json(va)},
                       {"edgeApproximation", sets_json(ea)}});
  return kExitOk;
}

int cmd_build(const std::string& path, const std::optional<std::string>& dot, std::ostream& out) {
  SoftRoughGraph srg = io::build(load_spec(path));
  out << io::dump(io::to_json(srg));
  if (dot) write_file(*dot, io::to_dot(srg));
  return kExitOk;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  out << io::dump(io::to_json(classify_induced(io::build(load_spec(path)))));
  return kExitOk;
}

int cmd_check_subgraph(const std::string& candidate, const std::string& parent, std::ostream& out) {
  SoftRoughGraph c = io::build(load_spec(candidate));
  SoftRoughGraph p = io::build(load_spec(parent));
  out << io::dump(io::to_json(is_soft_rough_subgraph(c, p)));
  return kExitOk;
}

int cmd_tree(const std::string& path, std::ostream& out) {
  SoftRoughGraph srg = io::build(load_spec(path));
  out << io::dump(json{{"softRoughTree", is_soft_rough_tree(srg)},
                       {"lowerIsTree", is_tree(srg.lower())},
                       {"upperIsTree", is_tree(srg.upper())}});
  return kExitOk;
}

int cmd_combine(const std::string& mode, const std::string& first, const std::optional<std::string>& second,
                std::ostream& out) {
  io::RunSpec s1 = load_spec(first);
  io::RunSpec s2 = second_operand(s1, second, "combine");
  out << io::dump(io::to_json(combine(io::build(s1), io::build(s2), parse_combine_mode(mode))));
  return kExitOk;
}

int cmd_product(const std::string& kind, const std::string& first, const std::optional<std::string>& second,
                const std::optional<std::string>& dot, std::ostream& out) {
  io::RunSpec s1 = load_spec(first);
  io::RunSpec s2 = second_operand(s1, second, "product");
  SoftRoughProduct p = srg_product(io::build(s1), io::build(s2), parse_product_kind(kind));
  out << io::dump(io::to_json(p));
  if (dot) write_file(*dot, io::to_dot(p));
  if (!p.verified()) throw InvariantViolation("product of approximation subgraphs is not a subgraph of the host product");
  return kExitOk;
}

int cmd_census(const std::string& path, const std::optional<std::string>& report_path, std::ostream& out) {
  CensusReport report = run_census(io::census_config_from_json(io::read_document(path)));
  out << format_summary(report);
  if (report_path) write_file(*report_path, io::dump(io::to_json(report)));
  return report.passed() ? kExitOk : kExitInvariant;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soft rough graphs: approximations, predicates, combinations, products and census", "srg"};
  app.require_subcommand(1);

  std::string spec, spec2, mode, kind;
  std::optional<std::string> dot, second, report;
  std::function<int()> action;

  auto* approx = app.add_subcommand("approx", "print F, K, the four approximation sets and definability");
  approx->add_option("spec", spec, "run-spec document")->required();
  approx->callback([&] { action = [&] { return cmd_approx(spec, out); }; });

  auto* build = app.add_subcommand("build", "build and serialize the soft rough graph");
  build->add_option("spec", spec, "run-spec document")->required();
  build->add_option("--dot", dot, "write H_* and H^* as a DOT document");
  build->callback([&] { action = [&] { return cmd_build(spec, dot, out); }; });

  auto* classify = app.add_subcommand("classify", "print the four induced-graph flags");
  classify->add_option("spec", spec, "run-spec document")->required();
  classify->callback([&] { action = [&] { return cmd_classify(spec, out); }; });

  auto* subgraph = app.add_subcommand("check-subgraph", "is <candidate> a soft rough subgraph of <parent>");
  subgraph->add_option("candidate", spec, "run-spec of the candidate")->required();
  subgraph->add_option("parent", spec2, "run-spec of the parent")->required();
  subgraph->callback([&] { action = [&] { return cmd_check_subgraph(spec, spec2, out); }; });

  auto* tree = app.add_subcommand("tree", "soft rough tree verdict");
  tree->add_option("spec", spec, "run-spec document")->required();
  tree->callback([&] { action = [&] { return cmd_tree(spec, out); }; });

  auto* comb = app.add_subcommand("combine", "AND / OR of two soft rough graphs over one host");
  comb->add_option("--mode", mode, "and | or")->required()->check(CLI::IsMember({"and", "or"}));
  comb->add_option("spec1", spec, "first operand")->required();
  comb->add_option("spec2", second, "second operand (default: 'second' block of spec1)");
  comb->callback([&] { action = [&] { return cmd_combine(mode, spec, second, out); }; });

  auto* prod = app.add_subcommand("product", "product of two soft rough graphs");
  prod->add_option("--kind", kind, "cartesian | lexicographic | join | corona")
      ->required()
      ->check(CLI::IsMember({"cartesian", "lexicographic", "join", "corona"}));
  prod->add_option("spec1", spec, "first operand")->required();
  prod->add_option("spec2", second, "second operand (default: 'second' block of spec1)");
  prod->add_option("--dot", dot, "write the lower and upper products as a DOT document");
  prod->callback([&] { action = [&] { return cmd_product(kind, spec, second, dot, out); }; });

  auto* census = app.add_subcommand("census", "exhaustive property census over all (A, X)");
  census->add_option("config", spec, "census config document")->required();
  census->add_option("--report", report, "write the full report as JSON");
  census->callback([&] { action = [&] { return cmd_census(spec, report, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "srg: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    return action();
  } catch (const InvariantViolation& e) {
    err << "srg: internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const PreconditionError& e) {
    err << "srg: precondition violated: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "srg: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace srg::cli
