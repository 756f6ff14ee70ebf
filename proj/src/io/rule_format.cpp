#include "mltg/io/rule_format.hpp"

#include "lexer.hpp"
#include "mltg/error.hpp"

namespace mltg::io {

RuleDocument parse_rule_document(std::string_view text) {
  using namespace detail;
  const auto lines = tokenize(text);
  RuleDocument doc;
  if (lines.empty() || lines[0].tokens[0] != "rule" || lines[0].tokens.size() != 2) {
    fail(lines.empty() ? 1 : lines[0].number, "expected 'rule NAME'");
  }
  doc.name = lines[0].tokens[1];
  std::size_t pos = 1;
  bool seen_from = false;
  bool seen_to = false;
  while (pos < lines.size()) {
    const Line& header = lines[pos];
    const auto& t = header.tokens;
    if (t[0] == "graph") {
      if (seen_from || seen_to) fail(header.number, "meta graphs must precede 'from' and 'to'");
      if (!(t.size() == 2 || (t.size() == 4 && t[2] == ":"))) fail(header.number, "expected 'graph NAME [: PARENT]'");
      GraphBlock block;
      block.name = t[1];
      if (doc.meta.empty() != (t.size() == 2)) fail(header.number, "only the first meta graph has no parent");
      if (t.size() == 4) {
        if (t[3] != doc.meta.back().name) fail(header.number, "meta graphs form a chain: parent must be the previous graph");
        block.parent = t[3];
      }
      BlockItems items;
      pos = parse_items(lines, pos + 1, header.number, doc.meta.size(), true, items);
      block.graph = std::move(items.graph);
      block.decls = std::move(items.decls);
      doc.meta.push_back(std::move(block));
      doc.constants.push_back(std::move(items.constants));
    } else if ((t[0] == "from" || t[0] == "to") && t.size() == 1) {
      bool& seen = t[0] == "from" ? seen_from : seen_to;
      if (seen) fail(header.number, "duplicate '" + t[0] + "' block");
      if (doc.meta.empty()) fail(header.number, "meta graphs must precede '" + t[0] + "'");
      seen = true;
      BlockItems items;
      pos = parse_items(lines, pos + 1, header.number, doc.meta.size(), false, items);
      (t[0] == "from" ? doc.from : doc.to) = {std::move(items.graph), std::move(items.decls)};
    } else {
      fail(header.number, "expected 'graph', 'from' or 'to'");
    }
  }
  if (!seen_from || !seen_to) fail(lines.back().number, "rule needs both 'from' and 'to' blocks");
  return doc;
}

std::string serialize_rule(const RuleDocument& doc) {
  std::string out = "rule " + doc.name + "\n";
  for (std::size_t i = 0; i < doc.meta.size(); ++i) {
    const auto& b = doc.meta[i];
    out += "\ngraph " + b.name + (b.parent ? " : " + *b.parent : std::string()) + "\n";
    out += detail::format_items(b.graph, b.decls, doc.constants[i], "  ");
    out += "end\n";
  }
  out += "\nfrom\n" + detail::format_items(doc.from.graph, doc.from.decls, {}, "  ") + "end\n";
  out += "\nto\n" + detail::format_items(doc.to.graph, doc.to.decls, {}, "  ") + "end\n";
  return out;
}

Rule build_rule(const RuleDocument& doc) {
  std::vector<GraphRef> graphs;
  std::vector<Declarations> decls;
  std::set<Constant> constants;
  for (std::size_t i = 0; i < doc.meta.size(); ++i) {
    graphs.push_back(share(doc.meta[i].graph));
    decls.push_back(doc.meta[i].decls);
    for (const auto& c : doc.constants[i]) constants.insert({i, c});
  }
  auto mm = share(TypingChain::from_direct_types(std::move(graphs), decls));
  auto left = MultilevelTyping::from_direct_types(doc.from.graph, mm, doc.from.decls);
  auto right = MultilevelTyping::from_direct_types(doc.to.graph, mm, doc.to.decls);
  return mltg::build_rule(doc.name, std::move(left), std::move(right), std::move(constants));
}

TypingChainMorphism parse_beta(std::string_view text, const ChainRef& mm, const ChainRef& tg) {
  using namespace detail;
  const auto lines = tokenize(text);
  std::optional<std::vector<std::size_t>> levels;
  std::vector<NameMap> nodes(mm->depth() + 1);
  std::vector<NameMap> arrows(mm->depth() + 1);
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "levels") {
      if (levels) fail(line.number, "duplicate 'levels' line");
      levels.emplace();
      for (std::size_t k = 1; k < t.size(); ++k) levels->push_back(parse_level(line, t[k]));
    } else if (t[0] == "map") {
      if (t.size() != 5 || t[3] != "->") fail(line.number, "expected 'map LEVEL NAME -> TARGET'");
      std::size_t i = parse_level(line, t[1]);
      if (i > mm->depth()) fail(line.number, "level " + t[1] + " is not in the rule's chain");
      const Graph& g = mm->graph(i);
      NameMap* table = nullptr;
      if (g.has_node(t[2])) {
        table = &nodes[i];
      } else if (g.has_arrow(t[2])) {
        table = &arrows[i];
      } else {
        fail(line.number, "unknown element '" + t[2] + "'");
      }
      if (!table->emplace(t[2], t[4]).second) fail(line.number, "element '" + t[2] + "' mapped twice");
    } else {
      fail(line.number, "expected 'levels' or 'map'");
    }
  }
  if (!levels) fail(lines.empty() ? 1 : lines.back().number, "missing 'levels' line");
  LevelMap f(tg->depth(), *levels);
  if (f.source_depth() != mm->depth()) throw Error(Errc::DepthMismatch, "level map does not fit the rule's depth");
  std::vector<GraphMorphism> maps;
  for (std::size_t i = 0; i <= mm->depth(); ++i) {
    maps.emplace_back(mm->graph_ref(i), tg->graph_ref(f(i)), nodes[i], arrows[i]);
  }
  return TypingChainMorphism(mm, tg, f, std::move(maps));
}

}  // namespace mltg::io
