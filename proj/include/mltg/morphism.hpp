#pragma once

#include <iosfwd>
#include <optional>

#include "mltg/graph.hpp"

namespace mltg {

using NameMap = std::map<std::string, std::string, std::less<>>;

/// Total graph homomorphism. Construction checks totality, that images lie
/// in the codomain, and the homomorphism law on sources and targets.
class GraphMorphism {
 public:
  GraphMorphism(GraphRef dom, GraphRef cod, NameMap node_map, NameMap arrow_map);

  static GraphMorphism identity(GraphRef g);
  /// Throws Errc::NotASubgraph unless sub ⊑ host.
  static GraphMorphism inclusion(GraphRef sub, GraphRef host);

  const Graph& dom() const { return *dom_; }
  const Graph& cod() const { return *cod_; }
  const GraphRef& dom_ref() const { return dom_; }
  const GraphRef& cod_ref() const { return cod_; }

  const NameMap& node_map() const { return nodes_; }
  const NameMap& arrow_map() const { return arrows_; }

  /// Throws Errc::UnknownElement.
  const std::string& node(std::string_view n) const;
  const std::string& arrow(std::string_view a) const;
  ElementId operator()(const ElementId& id) const;

  bool is_inclusion() const;
  bool is_injective() const;

  /// The image as a subgraph of the codomain.
  Graph image() const;

  /// Restriction to a subgraph of the domain.
  GraphMorphism restrict(GraphRef sub) const;
  /// Same maps with a smaller codomain; throws Errc::NotASubgraph if the
  /// image leaves it.
  GraphMorphism corestrict(GraphRef sub) const;

  friend bool operator==(const GraphMorphism& a, const GraphMorphism& b);

 private:
  GraphRef dom_;
  GraphRef cod_;
  NameMap nodes_;
  NameMap arrows_;
};

std::ostream& operator<<(std::ostream& os, const GraphMorphism& m);

/// Diagrammatic composition f;g. Throws Errc::CodomainMismatch.
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);

/// f⁻¹(sub) as a subgraph of f's domain; sub is read as a subgraph of f's codomain.
Graph preimage(const GraphMorphism& f, const Graph& sub);

/// Partial graph homomorphism: an explicit domain of definition def ⊑ dom
/// together with a total homomorphism def → cod.
class PartialGraphMorphism {
 public:
  /// Throws Errc::NotASubgraph unless def ⊑ dom.
  PartialGraphMorphism(GraphRef dom, GraphRef cod, GraphMorphism map);

  static PartialGraphMorphism total(const GraphMorphism& m);
  static PartialGraphMorphism empty(GraphRef dom, GraphRef cod);
  /// Inclusion span dom ⊒ dom ∩ cod ↪ cod for two subgraphs of one host.
  static PartialGraphMorphism intersection_span(GraphRef dom, GraphRef cod);

  const Graph& dom() const { return *dom_; }
  const Graph& cod() const { return map_.cod(); }
  const Graph& def() const { return map_.dom(); }
  const GraphRef& dom_ref() const { return dom_; }
  const GraphRef& cod_ref() const { return map_.cod_ref(); }
  const GraphMorphism& map() const { return map_; }

  bool is_total() const { return def() == dom(); }
  bool defined(const ElementId& id) const { return def().contains(id); }
  std::optional<ElementId> image(const ElementId& id) const;

  friend bool operator==(const PartialGraphMorphism& a, const PartialGraphMorphism& b);

 private:
  GraphRef dom_;
  GraphMorphism map_;
};

std::ostream& operator<<(std::ostream& os, const PartialGraphMorphism& m);

bool same_graph(const GraphRef& a, const GraphRef& b);

/// φ;ψ with def = φ⁻¹(def ψ). Throws Errc::CodomainMismatch unless φ.cod = ψ.dom.
PartialGraphMorphism compose_partial(const PartialGraphMorphism& phi, const PartialGraphMorphism& psi);

/// φ ⪯ χ: def φ ⊑ def χ and both agree on def φ. Throws Errc::SignatureMismatch.
bool leq_partial(const PartialGraphMorphism& phi, const PartialGraphMorphism& chi);

}  // namespace mltg
