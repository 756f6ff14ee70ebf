#pragma once

#include "mltg/constructions.hpp"
#include "mltg/match.hpp"

namespace mltg {

struct PushoutStep {
  MultilevelTyping d;               // D-chain with σ^D
  TypingChainMorphism sigma_incl;  // (ς, id): S-chain → D-chain
  TypingChainMorphism delta;       // (δ, f): I-chain → D-chain
  NameMap renamed;                  // freshened names of I∖L
  std::vector<std::string> trace;
};

struct FpbcStep {
  MultilevelTyping t;          // T-chain with σ^T
  TypingChainMorphism theta;  // (θ, id): T-chain → D-chain
  TypingChainMorphism nu;     // (ν, f): R-chain → T-chain
  ElementSet deleted;
  ElementSet dangling;
  std::vector<std::string> trace;
};

struct ApplicationResult {
  MultilevelTyping d;
  MultilevelTyping t;
  TypingChainMorphism sigma_incl;
  TypingChainMorphism delta;
  TypingChainMorphism theta;
  TypingChainMorphism nu;
  NameMap renamed;
  ElementSet deleted;
  ElementSet dangling;
  std::vector<std::string> trace;
};

/// D_0 = S + I∖L, D_f(i) = S_f(i) ∪ δ(I_i), D_a = S_a at gap levels; new
/// elements typed by σ^I;β. Throws Errc::MatchInvalid.
PushoutStep pushout_step(const Rule& rule, const MatchCandidate& match, const MultilevelTyping& host);

/// T_0 is the final pullback complement of ρ and δ_0, T_a = T_0 ∩ D_a and
/// σ^T the restriction of σ^D. Throws Errc::IdentificationConflict.
FpbcStep fpbc_step(const PushoutStep& pushout, const Rule& rule);

ApplicationResult apply_rule(const Rule& rule, const MatchCandidate& match, const MultilevelTyping& host);

/// Failed result equations and reduct conditions, each as a message; empty
/// when the result is consistent with rule, match and host.
std::vector<std::string> check_application(const ApplicationResult& result, const Rule& rule,
                                           const MatchCandidate& match, const MultilevelTyping& host);

}  // namespace mltg
