#include "mltg/io/hierarchy.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "mltg/error.hpp"

namespace mltg::io {

const GraphBlock* HierarchyDocument::find(std::string_view name) const {
  for (const auto& b : graphs) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::vector<std::string> HierarchyDocument::path(std::string_view name) const {
  std::vector<std::string> out;
  const GraphBlock* b = find(name);
  if (!b) throw Error(Errc::UnknownElement, "no graph named " + std::string(name));
  while (b) {
    out.push_back(b->name);
    b = b->parent ? find(*b->parent) : nullptr;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> HierarchyDocument::models() const {
  std::vector<std::string> out;
  for (const auto& b : graphs) {
    if (!b.parent) continue;
    bool has_child = std::any_of(graphs.begin(), graphs.end(), [&](const GraphBlock& c) { return c.parent == b.name; });
    if (!has_child) out.push_back(b.name);
  }
  return out;
}

HierarchyDocument parse_hierarchy(std::string_view text) {
  using namespace detail;
  HierarchyDocument doc;
  const auto lines = tokenize(text);
  std::map<std::string, std::size_t, std::less<>> levels;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    const Line& header = lines[pos];
    const auto& t = header.tokens;
    if (t[0] != "graph" || !(t.size() == 2 || (t.size() == 4 && t[2] == ":"))) {
      fail(header.number, "expected 'graph NAME' or 'graph NAME : PARENT'");
    }
    GraphBlock block;
    block.name = t[1];
    if (levels.count(block.name)) fail(header.number, "duplicate graph " + block.name);
    std::size_t level = 0;
    if (t.size() == 4) {
      auto it = levels.find(t[3]);
      if (it == levels.end()) fail(header.number, "parent " + t[3] + " must be declared before its children");
      block.parent = t[3];
      level = it->second + 1;
    }
    BlockItems items;
    pos = parse_items(lines, pos + 1, header.number, level, false, items);
    block.graph = std::move(items.graph);
    block.decls = std::move(items.decls);
    levels.emplace(block.name, level);
    doc.graphs.push_back(std::move(block));
  }
  return doc;
}

std::string serialize_hierarchy(const HierarchyDocument& doc) {
  std::string out;
  for (const auto& b : doc.graphs) {
    if (!out.empty()) out += "\n";
    out += "graph " + b.name + (b.parent ? " : " + *b.parent : std::string()) + "\n";
    out += detail::format_items(b.graph, b.decls, {}, "  ");
    out += "end\n";
  }
  return out;
}

namespace {

TypingChain path_chain(const HierarchyDocument& doc, const std::vector<std::string>& path) {
  std::vector<GraphRef> graphs;
  std::vector<Declarations> decls;
  for (const auto& name : path) {
    const GraphBlock* b = doc.find(name);
    graphs.push_back(share(b->graph));
    decls.push_back(b->decls);
  }
  return TypingChain::closure(std::move(graphs), decls);
}

}  // namespace

ChainRef load_chain(const HierarchyDocument& doc, std::string_view name) {
  auto path = doc.path(name);
  auto chain = path_chain(doc, path);
  auto report = validate_chain(chain);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(Errc::ChainAxiomViolation,
                std::string(to_string(v.axiom)) + " axiom violated at " + v.element.name + ": " + v.detail);
  }
  return share(std::move(chain));
}

LoadedModel load_model(const HierarchyDocument& doc, std::string_view name) {
  std::string model(name);
  if (model.empty()) {
    auto models = doc.models();
    if (models.size() != 1) {
      throw Error(Errc::UnknownElement, "the document has " + std::to_string(models.size()) + " models; choose one");
    }
    model = models.front();
  }
  auto path = doc.path(model);
  if (path.size() < 2) throw Error(Errc::UnknownElement, model + " has no type graph above it");
  auto target = load_chain(doc, path[path.size() - 2]);
  const GraphBlock* b = doc.find(model);
  auto typing = MultilevelTyping::from_direct_types(b->graph, target, b->decls);
  return {model, std::move(path), std::move(target), std::move(typing)};
}

std::vector<ModelReport> validate_document(const HierarchyDocument& doc) {
  std::vector<ModelReport> out;
  for (const auto& model : doc.models()) out.push_back({model, validate_chain(path_chain(doc, doc.path(model)))});
  return out;
}

HierarchyDocument replace_model(const HierarchyDocument& doc, std::string_view name, const MultilevelTyping& typing,
                                std::optional<std::string> new_name) {
  HierarchyDocument out = doc;
  auto it = std::find_if(out.graphs.begin(), out.graphs.end(), [&](const GraphBlock& b) { return b.name == name; });
  if (it == out.graphs.end()) throw Error(Errc::UnknownElement, "no graph named " + std::string(name));
  it->graph = typing.subject();
  it->decls = typing.declarations();
  detail::normalize(it->decls);
  if (new_name) {
    if (out.find(*new_name) && *new_name != name) throw Error(Errc::InvalidGraph, "graph " + *new_name + " exists");
    for (auto& b : out.graphs) {
      if (b.parent == name) b.parent = *new_name;
    }
    it->name = *new_name;
  }
  return out;
}

}  // namespace mltg::io
