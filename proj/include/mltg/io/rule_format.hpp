#pragma once

#include "mltg/io/hierarchy.hpp"
#include "mltg/rule.hpp"

namespace mltg::io {

struct SideBlock {
  Graph graph;
  Declarations decls;

  bool operator==(const SideBlock&) const = default;
};

/// `rule NAME`, the meta graphs top-down (each the parent of the next),
/// then a `from` block for L and a `to` block for R.
struct RuleDocument {
  std::string name;
  std::vector<GraphBlock> meta;
  std::vector<std::set<ElementId>> constants;  // per meta graph
  SideBlock from;
  SideBlock to;

  bool operator==(const RuleDocument&) const = default;
};

/// Throws Errc::ParseError.
RuleDocument parse_rule_document(std::string_view text);

std::string serialize_rule(const RuleDocument& doc);

/// Builds the rule; throws the errors of build_rule and of chain closure.
Rule build_rule(const RuleDocument& doc);

inline Rule parse_rule(std::string_view text) { return build_rule(parse_rule_document(text)); }

/// β file: `levels f(0) … f(n)` followed by `map LEVEL NAME -> TARGET`
/// lines covering every element of the rule's chain.
/// Throws Errc::ParseError, Errc::InvalidLevelMap, Errc::InvalidGraph.
TypingChainMorphism parse_beta(std::string_view text, const ChainRef& mm, const ChainRef& tg);

}  // namespace mltg::io
