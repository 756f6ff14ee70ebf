#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mltg/io/export.hpp"
#include "mltg/io/rule_format.hpp"

namespace {

using namespace mltg;

enum Exit { Ok = 0, Failure = 1, NoMatch = 2, NoComplement = 3, BadInput = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::UnknownElement, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::UnknownElement, "cannot write " + path);
  out << text;
}

std::string map_text(const GraphMorphism& m) {
  std::string out;
  auto add = [&](const NameMap& table) {
    for (const auto& [from, to] : table) out += (out.empty() ? "" : ", ") + from + " -> " + to;
  };
  add(m.node_map());
  add(m.arrow_map());
  return out.empty() ? "(empty)" : out;
}

std::string match_text(const MatchCandidate& m, std::size_t index, const std::string& model) {
  std::string out = "match " + std::to_string(index) + " model " + model + "\n  levels";
  for (auto v : m.levels().values()) out += " " + std::to_string(v);
  out += "\n";
  for (std::size_t i = 0; i < m.beta.maps().size(); ++i) {
    out += "  beta " + std::to_string(i) + ": " + map_text(m.beta.map(i)) + "\n";
  }
  return out + "  mu: " + map_text(m.mu) + "\n";
}

std::vector<MatchCandidate> model_matches(const Rule& rule, const io::LoadedModel& model, const std::string& beta_file,
                                          std::optional<std::size_t> limit) {
  MatchOptions options;
  options.limit = limit;
  options.execution = Execution::Parallel;
  if (!beta_file.empty()) options.beta = io::parse_beta(read_file(beta_file), rule.meta_ref(), model.target);
  return find_matches(rule, model.typing, options);
}

struct ValidateArgs {
  std::string hierarchy;
  std::string rule;
};

int cmd_validate(const ValidateArgs& args, bool json) {
  bool ok = true;
  io::Json out = io::Json::object();
  std::string text;
  if (!args.hierarchy.empty()) {
    auto reports = io::validate_document(io::parse_hierarchy(read_file(args.hierarchy)));
    for (const auto& r : reports) {
      ok = ok && r.report.ok();
      text += "model " + r.model + ": " + (r.report.ok() ? "ok" : "invalid") + "\n";
      for (const auto& v : r.report.violations) {
        text += "  " + std::string(to_string(v.axiom)) + " at " + v.element.name + ": " + v.detail + "\n";
      }
    }
    out["models"] = io::to_json(reports);
  }
  if (!args.rule.empty()) {
    auto rule = io::parse_rule(read_file(args.rule));
    text += "rule " + rule.name() + ": ok\n";
    out["rule"] = {{"name", rule.name()}, {"ok", true}};
  }
  std::cout << (json ? out.dump(2) + "\n" : text);
  return ok ? Ok : Failure;
}

struct MatchArgs {
  std::string rule;
  std::string hierarchy;
  std::string model;
  std::string beta;
  std::optional<std::size_t> limit;
};

int cmd_match(const MatchArgs& args, bool json) {
  auto rule = io::parse_rule(read_file(args.rule));
  auto doc = io::parse_hierarchy(read_file(args.hierarchy));
  auto models = args.model.empty() ? doc.models() : std::vector<std::string>{args.model};
  io::Json out = io::Json::array();
  std::size_t total = 0;
  for (const auto& name : models) {
    auto model = io::load_model(doc, name);
    auto matches = model_matches(rule, model, args.beta, args.limit);
    for (std::size_t k = 0; k < matches.size(); ++k) {
      if (json) {
        auto entry = io::to_json(matches[k]);
        entry["index"] = k;
        entry["model"] = name;
        out.push_back(std::move(entry));
      } else {
        std::cout << match_text(matches[k], k, name);
      }
    }
    total += matches.size();
  }
  if (json) std::cout << out.dump(2) << "\n";
  if (total == 0 && !json) std::cout << "no match\n";
  return total == 0 ? NoMatch : Ok;
}

struct ApplyArgs {
  MatchArgs match;
  std::size_t index = 0;
  std::string output;
  std::string result_name;
  bool trace = false;
};

int cmd_apply(const ApplyArgs& args, bool json) {
  auto rule = io::parse_rule(read_file(args.match.rule));
  auto doc = io::parse_hierarchy(read_file(args.match.hierarchy));
  auto model = io::load_model(doc, args.match.model);
  auto matches = model_matches(rule, model, args.match.beta, args.index + 1);
  if (matches.size() <= args.index) {
    if (json) {
      std::cout << io::Json{{"error", "NoMatch"}, {"message", "match index out of range"}}.dump(2) << "\n";
    } else {
      std::cerr << "mltg: no match with index " << args.index << "\n";
    }
    return NoMatch;
  }
  auto result = apply_rule(rule, matches[args.index], model.typing);
  std::optional<std::string> new_name;
  if (!args.result_name.empty()) new_name = args.result_name;
  auto out_doc = io::replace_model(doc, model.name, result.t, new_name);
  write_output(args.output, io::serialize_hierarchy(out_doc));
  if (json) {
    std::cerr << io::to_json(result).dump(2) << "\n";
  } else if (args.trace) {
    for (const auto& line : result.trace) std::cerr << "trace: " << line << "\n";
  }
  return Ok;
}

struct DotArgs {
  std::string hierarchy;
  std::string model;
  std::string output;
};

int cmd_export_dot(const DotArgs& args) {
  auto doc = io::parse_hierarchy(read_file(args.hierarchy));
  std::vector<std::string> graphs;
  if (!args.model.empty()) graphs = doc.path(args.model);
  write_output(args.output, io::export_dot(doc, graphs));
  return Ok;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::ParseError: return BadInput;
    case Errc::IdentificationConflict: return NoComplement;
    default: return Failure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multilevel typed graph transformation"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output and diagnostics");

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check the typing chains of a hierarchy and/or a rule");
  v->add_option("--hierarchy", validate.hierarchy, "Hierarchy document");
  v->add_option("--rule", validate.rule, "Rule document");
  v->require_option(1, 2);

  MatchArgs match;
  auto* m = app.add_subcommand("match", "List the matches of a rule");
  auto add_match_options = [](CLI::App* cmd, MatchArgs& a) {
    cmd->add_option("--rule", a.rule, "Rule document")->required();
    cmd->add_option("--hierarchy", a.hierarchy, "Hierarchy document")->required();
    cmd->add_option("--model", a.model, "Model graph (default: every model, or the only one)");
    cmd->add_option("--beta", a.beta, "Fixed typing chain morphism instead of enumeration");
  };
  add_match_options(m, match);
  m->add_option("--limit", match.limit, "Maximum number of matches per model");

  ApplyArgs apply;
  auto* a = app.add_subcommand("apply", "Apply a rule at a match and print the resulting hierarchy");
  add_match_options(a, apply.match);
  a->add_option("--match-index", apply.index, "Index of the match to use");
  a->add_option("--output", apply.output, "Output file (default: stdout)");
  a->add_option("--result-name", apply.result_name, "New name for the rewritten model");
  a->add_flag("--trace", apply.trace, "Print the construction log to stderr");

  DotArgs dot;
  auto* d = app.add_subcommand("export-dot", "Render a hierarchy as Graphviz DOT");
  d->add_option("--hierarchy", dot.hierarchy, "Hierarchy document")->required();
  d->add_option("--model", dot.model, "Only the type path of this model");
  d->add_option("--output", dot.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Ok : BadInput;
  }

  try {
    if (*v) return cmd_validate(validate, json);
    if (*m) return cmd_match(match, json);
    if (*a) return cmd_apply(apply, json);
    return cmd_export_dot(dot);
  } catch (const Error& e) {
    if (json) {
      std::cout << io::to_json(e).dump(2) << "\n";
    } else {
      std::cerr << "mltg: " << to_string(e.code()) << ": " << e.what() << "\n";
    }
    return exit_code(e.code());
  }
}
