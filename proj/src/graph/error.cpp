#include "mltg/error.hpp"

namespace mltg {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::CodomainMismatch: return "CodomainMismatch";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::NotInclusion: return "NotInclusion";
    case Errc::NotASubgraph: return "NotASubgraph";
    case Errc::IdentificationConflict: return "IdentificationConflict";
    case Errc::PullbackViolation: return "PullbackViolation";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::ChainMismatch: return "ChainMismatch";
    case Errc::InvalidLevelMap: return "InvalidLevelMap";
    case Errc::DepthMismatch: return "DepthMismatch";
    case Errc::DepthExceedsTarget: return "DepthExceedsTarget";
    case Errc::CoherenceViolation: return "CoherenceViolation";
    case Errc::TypingDisagreement: return "TypingDisagreement";
    case Errc::MatchInvalid: return "MatchInvalid";
    case Errc::ChainAxiomViolation: return "ChainAxiomViolation";
    case Errc::InvalidTyping: return "InvalidTyping";
    case Errc::ParseError: return "ParseError";
    case Errc::DanglingTypeReference: return "DanglingTypeReference";
  }
  return "Unknown";
}

}  // namespace mltg
