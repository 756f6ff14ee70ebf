#pragma once

#include <functional>
#include <optional>

#include "mltg/rule.hpp"

namespace mltg {

enum class Execution { Serial, Parallel };

/// Admissibility of mapping a pattern element onto a target element of the
/// same kind; an empty filter admits everything.
using CandidateFilter = std::function<bool(const ElementId& from, const ElementId& to)>;

/// All homomorphisms from → to allowed by the filter, ordered by the images
/// of from's nodes, then arrows, in name order.
std::vector<GraphMorphism> enumerate_homomorphisms(const GraphRef& from, const GraphRef& to,
                                                   const CandidateFilter& filter = {},
                                                   Execution execution = Execution::Serial);

/// All level maps [n] → [m], lexicographically ordered.
/// Throws Errc::DepthExceedsTarget when n > m.
std::vector<LevelMap> enumerate_level_maps(std::size_t n, std::size_t m);

/// All chain morphisms (β, f): mm → tg with constants mapped onto equally
/// named elements. Ordered by β_0, then β_1, and so on.
std::vector<TypingChainMorphism> enumerate_chain_morphisms(const ChainRef& mm, const ChainRef& tg, const LevelMap& f,
                                                           const std::set<Constant>& constants = {});

struct MatchCandidate {
  TypingChainMorphism beta;      // (β, f): MM → TG
  GraphMorphism mu;              // L → S
  TypingChainMorphism mu_chain;  // (μ, f): L-chain → S-chain

  const LevelMap& levels() const { return beta.levels(); }
  bool operator==(const MatchCandidate&) const = default;
};

struct MatchOptions {
  std::optional<std::size_t> limit;
  Execution execution = Execution::Serial;
  /// Fixed β instead of enumeration.
  std::optional<TypingChainMorphism> beta;
};

/// Every match of the rule into the host, ordered by f, then β, then μ.
std::vector<MatchCandidate> find_matches(const Rule& rule, const MultilevelTyping& host,
                                         const MatchOptions& options = {});

enum class MatchCondition { Signature, ChainMorphism, Constant, Reduct, TypeCompatibility };

std::string_view to_string(MatchCondition c);

struct MatchIssue {
  MatchCondition condition = MatchCondition::Signature;
  std::size_t level = 0;
  ElementId element;
  std::string detail;
};

struct MatchDiagnostics {
  std::vector<MatchIssue> issues;
  bool ok() const { return issues.empty(); }
};

MatchDiagnostics check_match(const Rule& rule, const MultilevelTyping& host, const GraphMorphism& mu,
                             const TypingChainMorphism& beta);

/// Validated match with its reduct morphism. Throws Errc::MatchInvalid.
MatchCandidate make_match(const Rule& rule, const MultilevelTyping& host, GraphMorphism mu, TypingChainMorphism beta);

}  // namespace mltg
