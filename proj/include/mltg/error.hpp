#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mltg {

enum class Errc {
  InvalidGraph,
  CodomainMismatch,
  SignatureMismatch,
  NotInclusion,
  NotASubgraph,
  IdentificationConflict,
  PullbackViolation,
  UnknownElement,
  ChainMismatch,
  InvalidLevelMap,
  DepthMismatch,
  DepthExceedsTarget,
  CoherenceViolation,
  TypingDisagreement,
  MatchInvalid,
  ChainAxiomViolation,
  InvalidTyping,
  ParseError,
  DanglingTypeReference,
};

std::string_view to_string(Errc code);

/// Engine failure tagged with an Errc code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mltg
