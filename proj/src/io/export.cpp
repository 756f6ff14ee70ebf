#include "mltg/io/export.hpp"

#include <algorithm>

namespace mltg::io {

namespace {

const char* kind_name(ElementKind k) { return k == ElementKind::Node ? "node" : "arrow"; }

Json name_map(const NameMap& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

std::string dot_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_node(std::string_view graph, std::string_view node) {
  return dot_string(std::string(graph) + "/" + std::string(node));
}

}  // namespace

Json to_json(const Graph& g) {
  Json out;
  out["nodes"] = Json::array();
  for (const auto& n : g.nodes()) out["nodes"].push_back(n);
  out["arrows"] = Json::array();
  for (const auto& [name, ends] : g.arrows()) {
    out["arrows"].push_back({{"name", name}, {"source", ends.source}, {"target", ends.target}});
  }
  return out;
}

Json to_json(const GraphMorphism& m) { return {{"nodes", name_map(m.node_map())}, {"arrows", name_map(m.arrow_map())}}; }

Json to_json(const LevelMap& f) { return Json(f.values()); }

Json to_json(const HierarchyDocument& doc) {
  Json graphs = Json::array();
  for (const auto& b : doc.graphs) {
    Json block = to_json(b.graph);
    block = Json{{"name", b.name}, {"parent", b.parent ? Json(*b.parent) : Json(nullptr)}, {"nodes", block["nodes"]},
                 {"arrows", block["arrows"]}};
    block["types"] = Json::array();
    for (const auto& d : b.decls.direct) {
      block["types"].push_back(
          {{"element", d.element.name}, {"kind", kind_name(d.element.kind)}, {"level", d.level}, {"type", d.type}});
    }
    block["overrides"] = Json::array();
    for (const auto& o : b.decls.overrides) {
      block["overrides"].push_back({{"element", o.element.name},
                                    {"kind", kind_name(o.element.kind)},
                                    {"level", o.level},
                                    {"type", o.type ? Json(*o.type) : Json(nullptr)}});
    }
    graphs.push_back(std::move(block));
  }
  return {{"graphs", std::move(graphs)}};
}

Json to_json(const std::vector<ModelReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json violations = Json::array();
    for (const auto& v : r.report.violations) {
      violations.push_back({{"axiom", std::string(to_string(v.axiom))},
                            {"levels", {v.k, v.j, v.i}},
                            {"element", v.element.name},
                            {"kind", kind_name(v.element.kind)},
                            {"detail", v.detail}});
    }
    out.push_back({{"model", r.model}, {"ok", r.report.ok()}, {"violations", std::move(violations)}});
  }
  return out;
}

Json to_json(const MatchCandidate& match) {
  Json beta = Json::array();
  for (const auto& m : match.beta.maps()) beta.push_back(to_json(m));
  return {{"levels", to_json(match.levels())}, {"beta", std::move(beta)}, {"mu", to_json(match.mu)}};
}

Json to_json(const MatchDiagnostics& diagnostics) {
  Json out = Json::array();
  for (const auto& issue : diagnostics.issues) {
    out.push_back({{"condition", std::string(to_string(issue.condition))},
                   {"level", issue.level},
                   {"element", issue.element.name},
                   {"detail", issue.detail}});
  }
  return out;
}

Json to_json(const ApplicationResult& result) {
  auto ids = [](const ElementSet& s) {
    Json out = Json::array();
    for (const auto& id : s) out.push_back({{"name", id.name}, {"kind", kind_name(id.kind)}});
    return out;
  };
  return {{"result", to_json(result.t.subject())},
          {"renamed", name_map(result.renamed)},
          {"deleted", ids(result.deleted)},
          {"dangling", ids(result.dangling)},
          {"trace", result.trace}};
}

Json to_json(const Error& error) {
  return {{"error", std::string(to_string(error.code()))}, {"message", error.what()}};
}

std::string export_dot(const HierarchyDocument& doc, const std::vector<std::string>& graphs) {
  auto shown = [&](std::string_view name) {
    return graphs.empty() || std::find(graphs.begin(), graphs.end(), name) != graphs.end();
  };
  auto level_graph = [&](const GraphBlock& b, std::size_t level) { return doc.path(b.name).at(level); };
  std::string out = "digraph hierarchy {\n  compound=true;\n  rankdir=BT;\n";
  for (const auto& b : doc.graphs) {
    if (!shown(b.name)) continue;
    std::map<ElementId, std::string> direct;
    for (const auto& d : b.decls.direct) direct[d.element] = d.type;
    out += "  subgraph " + dot_string("cluster_" + b.name) + " {\n    label=" + dot_string(b.name) + ";\n";
    for (const auto& n : b.graph.nodes()) out += "    " + dot_node(b.name, n) + " [label=" + dot_string(n) + "];\n";
    for (const auto& [name, ends] : b.graph.arrows()) {
      auto type = direct.find(ElementId::arrow(name));
      std::string label = type == direct.end() ? name : name + " : " + type->second;
      out += "    " + dot_node(b.name, ends.source) + " -> " + dot_node(b.name, ends.target) + " [label=" +
             dot_string(label) + "];\n";
    }
    out += "  }\n";
  }
  for (const auto& b : doc.graphs) {
    if (!shown(b.name)) continue;
    for (const auto& d : b.decls.direct) {
      if (d.element.kind != ElementKind::Node) continue;
      std::string target = level_graph(b, d.level);
      if (!shown(target)) continue;
      out += "  " + dot_node(b.name, d.element.name) + " -> " + dot_node(target, d.type) +
             " [style=dashed, label=" + dot_string(d.type) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace mltg::io
