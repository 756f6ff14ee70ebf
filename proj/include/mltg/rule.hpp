#pragma once

#include "mltg/chain.hpp"

namespace mltg {

/// Element of the rule's typing chain that must match an equally named
/// element of the host hierarchy.
struct Constant {
  std::size_t level = 0;
  ElementId element;

  auto operator<=>(const Constant&) const = default;
};

/// Multilevel typed cospan rule L ↪ I ↩ R with I = L ∪ R, all three typed
/// coherently over the rule's own typing chain MM.
class Rule {
 public:
  const std::string& name() const { return name_; }
  const TypingChain& meta() const { return left_.target(); }
  const ChainRef& meta_ref() const { return left_.target_ref(); }
  std::size_t depth() const { return left_.depth(); }
  const std::set<Constant>& constants() const { return constants_; }

  const MultilevelTyping& left() const { return left_; }
  const MultilevelTyping& right() const { return right_; }
  const MultilevelTyping& interface() const { return interface_; }

  const Graph& lhs() const { return left_.subject(); }
  const Graph& rhs() const { return right_.subject(); }
  const Graph& union_graph() const { return interface_.subject(); }

  const GraphMorphism& lambda() const { return lambda_chain_.map(0); }
  const GraphMorphism& rho() const { return rho_chain_.map(0); }
  /// (λ, id): L-chain → I-chain and (ρ, id): R-chain → I-chain.
  const TypingChainMorphism& lambda_chain() const { return lambda_chain_; }
  const TypingChainMorphism& rho_chain() const { return rho_chain_; }

  bool operator==(const Rule& other) const;

 private:
  friend Rule build_rule(std::string, MultilevelTyping, MultilevelTyping, std::set<Constant>);

  Rule(std::string name, MultilevelTyping left, MultilevelTyping right, MultilevelTyping interface,
       TypingChainMorphism lambda_chain, TypingChainMorphism rho_chain, std::set<Constant> constants);

  std::string name_;
  MultilevelTyping left_;
  MultilevelTyping right_;
  MultilevelTyping interface_;
  TypingChainMorphism lambda_chain_;
  TypingChainMorphism rho_chain_;
  std::set<Constant> constants_;
};

/// Checks coherence of the two typings, forms I = L ∪ R (equal names are the
/// same element), the union chain I_i = L_i ∪ R_i and the union typing.
/// Throws Errc::DepthMismatch, Errc::ChainMismatch, Errc::CoherenceViolation,
/// Errc::TypingDisagreement, Errc::UnknownElement (constant not in MM).
Rule build_rule(std::string name, MultilevelTyping left, MultilevelTyping right, std::set<Constant> constants = {});

/// I∖R, the elements a rule application deletes.
ElementSet rule_deletes(const Rule& rule);

}  // namespace mltg
