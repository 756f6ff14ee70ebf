#pragma once

#include "mltg/morphism.hpp"

namespace mltg {

/// Canonical name of a pullback element: "(x,y)".
std::string pair_name(std::string_view x, std::string_view y);

struct Pullback {
  GraphRef object;
  GraphMorphism first;   // object → f.dom
  GraphMorphism second;  // object → g.dom
};

/// Componentwise pullback of a cospan f: A → C ← B: g.
/// Throws Errc::CodomainMismatch.
Pullback pullback(const GraphMorphism& f, const GraphMorphism& g);

struct Pushout {
  GraphRef object;
  GraphMorphism inclusion;  // K ↪ P
  GraphMorphism extension;  // H → P, equals mu on G and the (renamed) identity on H∖G
  NameMap renamed;          // H∖G names that had to be freshened, old → new
};

/// Pushout of an inclusion lambda: G ↪ H along mu: G → K, built as
/// P = K + H∖G. Elements of H∖G whose name is used in K (as either kind) or
/// in `avoid` get the suffix `#k` with the smallest free k ≥ 2, skipping the
/// names of H and of `reserve`. Throws Errc::NotInclusion,
/// Errc::CodomainMismatch.
Pushout pushout_inclusion(const GraphMorphism& lambda, const GraphMorphism& mu, const NameSet& avoid = {},
                          const NameSet& reserve = {});

/// Smallest `base#k` (k ≥ 2) not contained in `taken`.
std::string fresh_name(std::string_view base, const NameSet& taken);

struct PullbackComplement {
  GraphRef object;        // T
  GraphMorphism inclusion;  // theta: T ↪ D
  GraphMorphism comatch;    // nu: R → T
  ElementSet deleted;       // delta(I∖R)
  ElementSet dangling;      // arrows removed because an endpoint was deleted
};

/// Final pullback complement of rho: R ↪ I followed by delta: I → D.
/// T is D without delta(I∖R) and without arrows left dangling by that.
/// Throws Errc::NotInclusion, Errc::CodomainMismatch,
/// Errc::IdentificationConflict (a deleted element is identified with a
/// preserved one, so no complement exists) and Errc::PullbackViolation.
PullbackComplement final_pullback_complement(const GraphMorphism& rho, const GraphMorphism& delta);

}  // namespace mltg
