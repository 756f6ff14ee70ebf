#include "lexer.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mltg/error.hpp"

namespace mltg::io::detail {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    ++number;
    Line line{number, {}};
    std::string current;
    auto flush = [&] {
      if (!current.empty()) line.tokens.push_back(std::move(current));
      current.clear();
    };
    for (std::size_t k = 0; k < raw.size(); ++k) {
      char c = raw[k];
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == '#' && current.empty()) {
        break;
      } else if (c == ':' || c == '@') {
        flush();
        line.tokens.emplace_back(1, c);
      } else if (c == '-' && k + 1 < raw.size() && raw[k + 1] == '>') {
        flush();
        line.tokens.emplace_back("->");
        ++k;
      } else {
        current.push_back(c);
      }
    }
    flush();
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = stop + 1;
  }
  return out;
}

void fail(std::size_t line, const std::string& message) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::size_t parse_level(const Line& line, const std::string& token) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == 'L') digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(line.number, "expected a level, got '" + token + "'");
  }
  return std::stoul(std::string(digits));
}

namespace {

struct PendingType {
  std::size_t line = 0;
  std::string keyword;
  std::string element;
  std::size_t level = 0;
  std::optional<std::string> type;
};

void expect_size(const Line& line, std::size_t n, const char* shape) {
  if (line.tokens.size() != n) fail(line.number, std::string("expected '") + shape + "'");
}

void expect_token(const Line& line, std::size_t k, const char* token, const char* shape) {
  if (line.tokens.at(k) != token) fail(line.number, std::string("expected '") + shape + "'");
}

}  // namespace

std::size_t parse_items(const std::vector<Line>& lines, std::size_t pos, std::size_t header_line,
                        std::size_t level_limit, bool allow_constants, BlockItems& out) {
  std::vector<PendingType> pending;
  auto mark_constant = [&](const Line& line, std::size_t k, ElementId id) {
    if (line.tokens.size() == k) return;
    if (line.tokens.size() != k + 1 || line.tokens[k] != "constant") fail(line.number, "unexpected trailing tokens");
    if (!allow_constants) fail(line.number, "constants are only allowed in rule meta graphs");
    out.constants.insert(std::move(id));
  };
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    const auto& t = line.tokens;
    const std::string& kw = t[0];
    if (kw == "end") {
      expect_size(line, 1, "end");
      break;
    }
    try {
      if (kw == "node") {
        if (t.size() < 2) fail(line.number, "expected 'node NAME'");
        if (out.graph.has_arrow(t[1])) fail(line.number, "name " + t[1] + " is already an arrow");
        out.graph.add_node(t[1]);
        mark_constant(line, 2, ElementId::node(t[1]));
      } else if (kw == "arrow") {
        const char* shape = "arrow NAME: SOURCE -> TARGET";
        if (t.size() < 6) fail(line.number, std::string("expected '") + shape + "'");
        expect_token(line, 2, ":", shape);
        expect_token(line, 4, "->", shape);
        if (out.graph.has_node(t[1])) fail(line.number, "name " + t[1] + " is already a node");
        out.graph.add_arrow(t[1], t[3], t[5]);
        mark_constant(line, 6, ElementId::arrow(t[1]));
      } else if (kw == "type" || kw == "typing") {
        const char* shape = "type NAME @ LEVEL:TYPE";
        expect_size(line, 6, shape);
        expect_token(line, 2, "@", shape);
        expect_token(line, 4, ":", shape);
        pending.push_back({line.number, kw, t[1], parse_level(line, t[3]), t[5]});
      } else if (kw == "untyped") {
        const char* shape = "untyped NAME @ LEVEL";
        expect_size(line, 4, shape);
        expect_token(line, 2, "@", shape);
        pending.push_back({line.number, kw, t[1], parse_level(line, t[3]), std::nullopt});
      } else {
        fail(line.number, "unknown keyword '" + kw + "'");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) throw;
      fail(line.number, e.what());
    }
  }
  if (pos == lines.size()) fail(header_line, "block is not closed by 'end'");

  for (const auto& p : pending) {
    ElementId id;
    if (out.graph.has_node(p.element)) {
      id = ElementId::node(p.element);
    } else if (out.graph.has_arrow(p.element)) {
      id = ElementId::arrow(p.element);
    } else {
      fail(p.line, "unknown element '" + p.element + "'");
    }
    if (p.level >= level_limit) fail(p.line, "level " + std::to_string(p.level) + " is not above this graph");
    if (p.keyword == "type") {
      out.decls.direct.push_back({id, p.level, *p.type});
    } else {
      out.decls.overrides.push_back({id, p.level, p.type});
    }
  }
  normalize(out.decls);
  return pos + 1;
}

void normalize(Declarations& decls) {
  std::sort(decls.direct.begin(), decls.direct.end());
  std::sort(decls.overrides.begin(), decls.overrides.end());
}

std::string format_items(const Graph& graph, const Declarations& decls, const ElementSet& constants,
                         std::string_view indent) {
  std::string out;
  auto suffix = [&](const ElementId& id) { return constants.count(id) ? std::string(" constant") : std::string(); };
  for (const auto& n : graph.nodes()) {
    out += std::string(indent) + "node " + n + suffix(ElementId::node(n)) + "\n";
  }
  for (const auto& [name, ends] : graph.arrows()) {
    out += std::string(indent) + "arrow " + name + ": " + ends.source + " -> " + ends.target +
           suffix(ElementId::arrow(name)) + "\n";
  }
  Declarations sorted = decls;
  normalize(sorted);
  for (const auto& d : sorted.direct) {
    out += std::string(indent) + "type " + d.element.name + " @ " + std::to_string(d.level) + ":" + d.type + "\n";
  }
  for (const auto& o : sorted.overrides) {
    if (o.type) {
      out += std::string(indent) + "typing " + o.element.name + " @ " + std::to_string(o.level) + ":" + *o.type + "\n";
    } else {
      out += std::string(indent) + "untyped " + o.element.name + " @ " + std::to_string(o.level) + "\n";
    }
  }
  return out;
}

}  // namespace mltg::io::detail
