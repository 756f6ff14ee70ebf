#include "mltg/morphism.hpp"

#include <ostream>

#include "mltg/error.hpp"

namespace mltg {

namespace {

const std::string& lookup(const NameMap& map, std::string_view key, const char* what) {
  auto it = map.find(key);
  if (it == map.end()) {
    throw Error(Errc::UnknownElement, std::string(what) + " " + std::string(key) + " is not in the domain");
  }
  return it->second;
}

}  // namespace

bool same_graph(const GraphRef& a, const GraphRef& b) { return a == b || *a == *b; }

GraphMorphism::GraphMorphism(GraphRef dom, GraphRef cod, NameMap node_map, NameMap arrow_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), nodes_(std::move(node_map)), arrows_(std::move(arrow_map)) {
  if (nodes_.size() != dom_->node_count() || arrows_.size() != dom_->arrow_count()) {
    throw Error(Errc::InvalidGraph, "morphism is not total on its domain");
  }
  for (const auto& [x, y] : nodes_) {
    if (!dom_->has_node(x)) throw Error(Errc::InvalidGraph, "mapped node " + x + " is not in the domain");
    if (!cod_->has_node(y)) throw Error(Errc::InvalidGraph, "image node " + y + " is not in the codomain");
  }
  for (const auto& [a, b] : arrows_) {
    if (!dom_->has_arrow(a)) throw Error(Errc::InvalidGraph, "mapped arrow " + a + " is not in the domain");
    if (!cod_->has_arrow(b)) throw Error(Errc::InvalidGraph, "image arrow " + b + " is not in the codomain");
    const auto& src = dom_->ends(a);
    const auto& img = cod_->ends(b);
    if (nodes_.at(src.source) != img.source || nodes_.at(src.target) != img.target) {
      throw Error(Errc::InvalidGraph, "arrow " + a + " violates the homomorphism law");
    }
  }
}

GraphMorphism GraphMorphism::identity(GraphRef g) {
  NameMap n, a;
  for (const auto& x : g->nodes()) n.emplace(x, x);
  for (const auto& [x, _] : g->arrows()) a.emplace(x, x);
  return GraphMorphism(g, g, std::move(n), std::move(a));
}

GraphMorphism GraphMorphism::inclusion(GraphRef sub, GraphRef host) {
  if (!is_subgraph(*sub, *host)) throw Error(Errc::NotASubgraph, "inclusion source is not a subgraph");
  NameMap n, a;
  for (const auto& x : sub->nodes()) n.emplace(x, x);
  for (const auto& [x, _] : sub->arrows()) a.emplace(x, x);
  return GraphMorphism(std::move(sub), std::move(host), std::move(n), std::move(a));
}

const std::string& GraphMorphism::node(std::string_view n) const { return lookup(nodes_, n, "node"); }
const std::string& GraphMorphism::arrow(std::string_view a) const { return lookup(arrows_, a, "arrow"); }

ElementId GraphMorphism::operator()(const ElementId& id) const {
  return id.kind == ElementKind::Node ? ElementId::node(node(id.name)) : ElementId::arrow(arrow(id.name));
}

bool GraphMorphism::is_inclusion() const {
  for (const auto& [x, y] : nodes_) {
    if (x != y) return false;
  }
  for (const auto& [x, y] : arrows_) {
    if (x != y) return false;
  }
  return true;
}

bool GraphMorphism::is_injective() const {
  NameSet seen_nodes, seen_arrows;
  for (const auto& [_, y] : nodes_) {
    if (!seen_nodes.insert(y).second) return false;
  }
  for (const auto& [_, y] : arrows_) {
    if (!seen_arrows.insert(y).second) return false;
  }
  return true;
}

Graph GraphMorphism::image() const {
  ElementSet members;
  for (const auto& [_, y] : nodes_) members.insert(ElementId::node(y));
  for (const auto& [_, y] : arrows_) members.insert(ElementId::arrow(y));
  return subgraph_of(*cod_, members);
}

GraphMorphism GraphMorphism::restrict(GraphRef sub) const {
  if (!is_subgraph(*sub, *dom_)) throw Error(Errc::NotASubgraph, "restriction target is not a subgraph of the domain");
  NameMap n, a;
  for (const auto& x : sub->nodes()) n.emplace(x, nodes_.at(x));
  for (const auto& [x, _] : sub->arrows()) a.emplace(x, arrows_.at(x));
  return GraphMorphism(std::move(sub), cod_, std::move(n), std::move(a));
}

GraphMorphism GraphMorphism::corestrict(GraphRef sub) const {
  for (const auto& [_, y] : nodes_) {
    if (!sub->has_node(y)) throw Error(Errc::NotASubgraph, "image node " + y + " leaves the corestriction");
  }
  for (const auto& [_, y] : arrows_) {
    if (!sub->has_arrow(y)) throw Error(Errc::NotASubgraph, "image arrow " + y + " leaves the corestriction");
  }
  return GraphMorphism(dom_, std::move(sub), nodes_, arrows_);
}

bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
  return a.nodes_ == b.nodes_ && a.arrows_ == b.arrows_ && same_graph(a.dom_, b.dom_) &&
         same_graph(a.cod_, b.cod_);
}

std::ostream& operator<<(std::ostream& os, const GraphMorphism& m) {
  os << "[";
  bool first = true;
  for (const auto& [x, y] : m.node_map()) {
    os << (first ? "" : ", ") << x << "->" << y;
    first = false;
  }
  for (const auto& [x, y] : m.arrow_map()) {
    os << (first ? "" : ", ") << x << "->" << y;
    first = false;
  }
  return os << "]";
}

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
  if (!same_graph(f.cod_ref(), g.dom_ref())) {
    throw Error(Errc::CodomainMismatch, "composition of morphisms with mismatched codomain/domain");
  }
  NameMap n, a;
  for (const auto& [x, y] : f.node_map()) n.emplace(x, g.node(y));
  for (const auto& [x, y] : f.arrow_map()) a.emplace(x, g.arrow(y));
  return GraphMorphism(f.dom_ref(), g.cod_ref(), std::move(n), std::move(a));
}

Graph preimage(const GraphMorphism& f, const Graph& sub) {
  Graph out;
  for (const auto& [x, y] : f.node_map()) {
    if (sub.has_node(y)) out.add_node(x);
  }
  for (const auto& [x, y] : f.arrow_map()) {
    if (!sub.has_arrow(y)) continue;
    // Endpoints of a preimage arrow are preimages of the image endpoints.
    const auto& e = f.dom().ends(x);
    out.add_arrow(x, e.source, e.target);
  }
  return out;
}

PartialGraphMorphism::PartialGraphMorphism(GraphRef dom, GraphRef cod, GraphMorphism map)
    : dom_(std::move(dom)), map_(std::move(map)) {
  if (!is_subgraph(map_.dom(), *dom_)) {
    throw Error(Errc::NotASubgraph, "domain of definition is not a subgraph of the domain");
  }
  if (!same_graph(cod, map_.cod_ref())) {
    throw Error(Errc::CodomainMismatch, "partial morphism codomain differs from its map's codomain");
  }
}

PartialGraphMorphism PartialGraphMorphism::total(const GraphMorphism& m) {
  return PartialGraphMorphism(m.dom_ref(), m.cod_ref(), m);
}

PartialGraphMorphism PartialGraphMorphism::empty(GraphRef dom, GraphRef cod) {
  GraphMorphism none(share(Graph{}), cod, {}, {});
  return PartialGraphMorphism(std::move(dom), std::move(cod), std::move(none));
}

PartialGraphMorphism PartialGraphMorphism::intersection_span(GraphRef dom, GraphRef cod) {
  auto def = share(intersection(*dom, *cod));
  return PartialGraphMorphism(dom, cod, GraphMorphism::inclusion(def, cod));
}

std::optional<ElementId> PartialGraphMorphism::image(const ElementId& id) const {
  if (!defined(id)) return std::nullopt;
  return map_(id);
}

bool operator==(const PartialGraphMorphism& a, const PartialGraphMorphism& b) {
  return same_graph(a.dom_, b.dom_) && a.map_ == b.map_;
}

std::ostream& operator<<(std::ostream& os, const PartialGraphMorphism& m) { return os << m.map(); }

PartialGraphMorphism compose_partial(const PartialGraphMorphism& phi, const PartialGraphMorphism& psi) {
  if (!same_graph(phi.cod_ref(), psi.dom_ref())) {
    throw Error(Errc::CodomainMismatch, "composition of partial morphisms with mismatched codomain/domain");
  }
  // def(φ;ψ) = φ⁻¹(def ψ), taken inside def φ.
  auto def = share(preimage(phi.map(), psi.def()));
  NameMap n, a;
  for (const auto& x : def->nodes()) n.emplace(x, psi.map().node(phi.map().node(x)));
  for (const auto& [x, _] : def->arrows()) a.emplace(x, psi.map().arrow(phi.map().arrow(x)));
  return PartialGraphMorphism(phi.dom_ref(), psi.cod_ref(),
                              GraphMorphism(def, psi.cod_ref(), std::move(n), std::move(a)));
}

bool leq_partial(const PartialGraphMorphism& phi, const PartialGraphMorphism& chi) {
  if (!same_graph(phi.dom_ref(), chi.dom_ref()) || !same_graph(phi.cod_ref(), chi.cod_ref())) {
    throw Error(Errc::SignatureMismatch, "order comparison of partial morphisms with different signatures");
  }
  if (!is_subgraph(phi.def(), chi.def())) return false;
  for (const auto& [x, y] : phi.map().node_map()) {
    if (chi.map().node(x) != y) return false;
  }
  for (const auto& [x, y] : phi.map().arrow_map()) {
    if (chi.map().arrow(x) != y) return false;
  }
  return true;
}

}  // namespace mltg
