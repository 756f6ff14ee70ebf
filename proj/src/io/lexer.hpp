#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mltg/chain.hpp"

namespace mltg::io::detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

/// Splits text into lines of tokens. `:`, `@` and `->` are separate tokens;
/// `#` at the start of a token begins a comment. Blank lines are dropped.
std::vector<Line> tokenize(std::string_view text);

[[noreturn]] void fail(std::size_t line, const std::string& message);

/// Parses `2` or `L2`.
std::size_t parse_level(const Line& line, const std::string& token);

struct BlockItems {
  Graph graph;
  Declarations decls;
  ElementSet constants;
};

/// Parses item lines starting at lines[pos] up to the closing `end` and
/// returns the index after it. Type levels must be below `level_limit`.
std::size_t parse_items(const std::vector<Line>& lines, std::size_t pos, std::size_t header_line,
                        std::size_t level_limit, bool allow_constants, BlockItems& out);

/// Item lines of a block in canonical order, each indented by `indent`.
std::string format_items(const Graph& graph, const Declarations& decls, const ElementSet& constants,
                         std::string_view indent);

/// Sorts declarations into canonical order.
void normalize(Declarations& decls);

}  // namespace mltg::io::detail
