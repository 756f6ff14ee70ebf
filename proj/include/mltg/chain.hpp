#pragma once

#include <optional>
#include <vector>

#include "mltg/morphism.hpp"

namespace mltg {

/// Direct type declaration `element @ level:type`.
struct TypeDeclaration {
  ElementId element;
  std::size_t level = 0;
  std::string type;

  auto operator<=>(const TypeDeclaration&) const = default;
};

/// Explicit typing at a level below the direct type. A missing `type`
/// removes the element from that level instead.
struct TypingOverride {
  ElementId element;
  std::size_t level = 0;
  std::optional<std::string> type;

  auto operator<=>(const TypingOverride&) const = default;
};

struct Declarations {
  std::vector<TypeDeclaration> direct;
  std::vector<TypingOverride> overrides;

  bool operator==(const Declarations&) const = default;
};

/// Sequence of graphs [G_n, …, G_0] (stored by level, index 0 = top) with a
/// partial typing morphism tau(j, i): G_j ⇀ G_i for every j > i.
/// All morphisms are materialized; the constructor only checks signatures,
/// use validate_chain() for the axioms.
class TypingChain {
 public:
  /// typing[j][i] for i < j; typing[0] is empty. Throws Errc::ChainMismatch.
  TypingChain(std::vector<GraphRef> graphs, std::vector<std::vector<PartialGraphMorphism>> typing);

  static TypingChain single(GraphRef top);

  /// Builds the typing family by transitive closure of direct types, applies
  /// overrides and validates. decls[i] belongs to graph i; decls[0] must be
  /// empty. Throws Errc::UnknownElement, Errc::DanglingTypeReference,
  /// Errc::InvalidTyping, Errc::ChainAxiomViolation.
  static TypingChain from_direct_types(std::vector<GraphRef> graphs, const std::vector<Declarations>& decls);

  /// from_direct_types() without the axiom check.
  static TypingChain closure(std::vector<GraphRef> graphs, const std::vector<Declarations>& decls);

  std::size_t depth() const { return graphs_.size() - 1; }
  const Graph& graph(std::size_t level) const;
  const GraphRef& graph_ref(std::size_t level) const;
  const std::vector<GraphRef>& graphs() const { return graphs_; }

  /// Throws Errc::ChainMismatch unless depth ≥ j > i.
  const PartialGraphMorphism& typing(std::size_t j, std::size_t i) const;

  /// The chain [G_top-1, …, G_0]: the prefix above level `top`.
  TypingChain prefix(std::size_t top) const;

  friend bool operator==(const TypingChain& a, const TypingChain& b);

 private:
  std::vector<GraphRef> graphs_;
  std::vector<std::vector<PartialGraphMorphism>> typing_;
};

using ChainRef = std::shared_ptr<const TypingChain>;

inline ChainRef share(TypingChain c) { return std::make_shared<const TypingChain>(std::move(c)); }

/// Per-level partial maps X ⇀ target.G_k (k < top) obtained from direct
/// types by transitive closure, then adjusted by overrides.
std::vector<PartialGraphMorphism> close_direct_types(const GraphRef& subject, const TypingChain& target,
                                                     std::size_t top, const Declarations& decls);

enum class Axiom { Total, Transitive, Connex };

std::string_view to_string(Axiom a);

struct Violation {
  Axiom axiom = Axiom::Total;
  std::size_t k = 0;
  std::size_t j = 0;
  std::size_t i = 0;
  ElementId element;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_chain(const TypingChain& chain);

struct DirectType {
  std::size_t level = 0;
  ElementId element;

  auto operator<=>(const DirectType&) const = default;
};

/// Direct type of e ∈ G_level: the typing at the largest level m < level
/// whose typing morphism is defined on e. Throws Errc::UnknownElement and
/// Errc::ChainMismatch (level 0 or out of range).
std::optional<DirectType> direct_type(const TypingChain& chain, std::size_t level, const ElementId& e);

/// All types of e strictly below its direct type, by descending level.
std::vector<DirectType> transitive_types(const TypingChain& chain, std::size_t level, const ElementId& e);

/// Typing chain of subgraphs of a host H = H_0 with intersection spans as
/// typing morphisms.
class InclusionChain {
 public:
  /// levels[0] is the host; throws Errc::NotASubgraph.
  explicit InclusionChain(std::vector<Graph> levels);

  std::size_t depth() const { return levels_.size() - 1; }
  const Graph& host() const { return *levels_.front(); }
  const GraphRef& host_ref() const { return levels_.front(); }
  const Graph& level(std::size_t i) const { return *levels_.at(i); }
  const GraphRef& level_ref(std::size_t i) const { return levels_.at(i); }
  const TypingChain& chain() const { return *chain_; }
  const ChainRef& chain_ref() const { return chain_; }

  bool operator==(const InclusionChain& other) const;

 private:
  std::vector<GraphRef> levels_;
  ChainRef chain_;
};

/// Inclusion chain on `host` with H_i = levels_above[i - 1].
InclusionChain inclusion_chain(const Graph& host, std::vector<Graph> levels_above);

/// Level map f: [n] → [m] with f(0) = 0 and f(j) − f(i) ≥ j − i for j > i.
class LevelMap {
 public:
  /// values[i] = f(i); throws Errc::InvalidLevelMap.
  LevelMap(std::size_t target_depth, std::vector<std::size_t> values);

  static LevelMap identity(std::size_t n);

  std::size_t operator()(std::size_t i) const { return values_.at(i); }
  std::size_t source_depth() const { return values_.size() - 1; }
  std::size_t target_depth() const { return target_depth_; }
  const std::vector<std::size_t>& values() const { return values_; }
  bool covers(std::size_t level) const;
  bool is_identity() const;

  auto operator<=>(const LevelMap&) const = default;

 private:
  std::size_t target_depth_ = 0;
  std::vector<std::size_t> values_;
};

std::ostream& operator<<(std::ostream& os, const LevelMap& f);

LevelMap compose(const LevelMap& f, const LevelMap& g);

/// Level map f plus total homomorphisms maps[i]: G_i → H_f(i). The
/// constructor checks signatures only; see compatibility_violations().
class TypingChainMorphism {
 public:
  /// Throws Errc::ChainMismatch.
  TypingChainMorphism(ChainRef src, ChainRef dst, LevelMap levels, std::vector<GraphMorphism> maps);

  static TypingChainMorphism identity(const ChainRef& chain);

  const TypingChain& src() const { return *src_; }
  const TypingChain& dst() const { return *dst_; }
  const ChainRef& src_ref() const { return src_; }
  const ChainRef& dst_ref() const { return dst_; }
  const LevelMap& levels() const { return levels_; }
  const GraphMorphism& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<GraphMorphism>& maps() const { return maps_; }

  friend bool operator==(const TypingChainMorphism& a, const TypingChainMorphism& b);

 private:
  ChainRef src_;
  ChainRef dst_;
  LevelMap levels_;
  std::vector<GraphMorphism> maps_;
};

bool same_chain(const ChainRef& a, const ChainRef& b);

struct CompatibilityViolation {
  std::size_t j = 0;
  std::size_t i = 0;
  ElementId element;
  std::string detail;
};

/// Witnesses of τG(j,i);φ_i ⪯ φ_j;τH(f(j),f(i)) failing.
std::vector<CompatibilityViolation> compatibility_violations(const TypingChainMorphism& m);

bool is_chain_morphism(const TypingChainMorphism& m);

/// Compatibility holds with equality at every j > i.
bool is_closed(const TypingChainMorphism& m);

/// (φ,f);(ψ,g) = (φ;ψ↓f, f;g). Throws Errc::ChainMismatch.
TypingChainMorphism compose_chain_morphisms(const TypingChainMorphism& a, const TypingChainMorphism& b);

struct Reduct {
  InclusionChain chain;
  TypingChainMorphism morphism;
};

/// Pulls the inclusion chain `target` back along phi0: G_0 → H_0 and f.
Reduct reduct(const InclusionChain& target, const GraphMorphism& phi0, const LevelMap& f);

/// Every left square G_j ↪ G_0, G_j → H_f(j), H_f(j) ↪ H_0 is a pullback.
bool left_squares_are_pullbacks(const InclusionChain& src, const InclusionChain& dst, const LevelMap& f,
                                const std::vector<GraphMorphism>& phi);

/// (φ, f) is a closed typing chain morphism and, for all j > i, both squares
/// from G_j ∩ G_i to H_f(j) ∩ H_f(i) are pullbacks.
bool closed_with_intersection_pullbacks(const InclusionChain& src, const InclusionChain& dst, const LevelMap& f,
                                        const std::vector<GraphMorphism>& phi);

/// (φ, f) between inclusion chains is a reduct morphism.
bool is_reduct_morphism(const InclusionChain& src, const InclusionChain& dst, const TypingChainMorphism& m);

/// Inclusion chain on a subject graph plus a typing chain morphism with
/// identity level map into a target chain.
class MultilevelTyping {
 public:
  /// Throws Errc::InvalidTyping unless the typing is a chain morphism from
  /// chain.chain() with identity levels.
  MultilevelTyping(InclusionChain chain, TypingChainMorphism typing);

  /// Transitive closure of direct types, then overrides. Every element
  /// needs a direct type. Throws Errc::InvalidTyping, Errc::UnknownElement,
  /// Errc::DanglingTypeReference.
  static MultilevelTyping from_direct_types(Graph subject, ChainRef target, const Declarations& decls);

  /// types[a] maps each element of level a to its type name in target.G_a.
  static MultilevelTyping from_level_types(Graph subject, ChainRef target,
                                           const std::vector<std::map<ElementId, std::string>>& types);

  const Graph& subject() const { return chain_.host(); }
  std::size_t depth() const { return chain_.depth(); }
  const InclusionChain& chain() const { return chain_; }
  const TypingChainMorphism& typing() const { return typing_; }
  const TypingChain& target() const { return typing_.dst(); }
  const ChainRef& target_ref() const { return typing_.dst_ref(); }

  /// Type of e at `level`, if e is typed there.
  std::optional<ElementId> type_at(std::size_t level, const ElementId& e) const;

  /// Highest level typing e. Throws Errc::UnknownElement.
  DirectType direct_type(const ElementId& e) const;

  /// Direct types plus the `untyped` overrides needed to reproduce this
  /// typing exactly through from_direct_types().
  Declarations declarations() const;

  bool operator==(const MultilevelTyping& other) const;

 private:
  InclusionChain chain_;
  TypingChainMorphism typing_;
};

}  // namespace mltg
