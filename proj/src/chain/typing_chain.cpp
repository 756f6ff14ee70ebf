#include <algorithm>

#include "mltg/chain.hpp"
#include "mltg/error.hpp"

namespace mltg {

namespace {

std::string levels_text(std::size_t j, std::size_t i) {
  return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

bool has_element(const Graph& g, ElementKind kind, std::string_view name) {
  return kind == ElementKind::Node ? g.has_node(name) : g.has_arrow(name);
}

}  // namespace

TypingChain::TypingChain(std::vector<GraphRef> graphs, std::vector<std::vector<PartialGraphMorphism>> typing)
    : graphs_(std::move(graphs)), typing_(std::move(typing)) {
  if (graphs_.empty()) throw Error(Errc::ChainMismatch, "a typing chain needs at least one graph");
  if (typing_.size() != graphs_.size()) throw Error(Errc::ChainMismatch, "typing family has the wrong length");
  for (std::size_t j = 0; j < graphs_.size(); ++j) {
    if (typing_[j].size() != j) {
      throw Error(Errc::ChainMismatch, "level " + std::to_string(j) + " needs one typing per higher level");
    }
    for (std::size_t i = 0; i < j; ++i) {
      const auto& t = typing_[j][i];
      if (!same_graph(t.dom_ref(), graphs_[j]) || !same_graph(t.cod_ref(), graphs_[i])) {
        throw Error(Errc::ChainMismatch, "typing " + levels_text(j, i) + " has the wrong signature");
      }
    }
  }
}

TypingChain TypingChain::single(GraphRef top) {
  std::vector<std::vector<PartialGraphMorphism>> typing(1);
  return TypingChain({std::move(top)}, std::move(typing));
}

const Graph& TypingChain::graph(std::size_t level) const { return *graph_ref(level); }

const GraphRef& TypingChain::graph_ref(std::size_t level) const {
  if (level >= graphs_.size()) throw Error(Errc::ChainMismatch, "level " + std::to_string(level) + " out of range");
  return graphs_[level];
}

const PartialGraphMorphism& TypingChain::typing(std::size_t j, std::size_t i) const {
  if (j >= graphs_.size() || i >= j) throw Error(Errc::ChainMismatch, "no typing morphism " + levels_text(j, i));
  return typing_[j][i];
}

TypingChain TypingChain::prefix(std::size_t top) const {
  if (top == 0 || top > graphs_.size()) throw Error(Errc::ChainMismatch, "invalid chain prefix");
  std::vector<GraphRef> graphs(graphs_.begin(), graphs_.begin() + static_cast<std::ptrdiff_t>(top));
  std::vector<std::vector<PartialGraphMorphism>> typing(typing_.begin(),
                                                        typing_.begin() + static_cast<std::ptrdiff_t>(top));
  return TypingChain(std::move(graphs), std::move(typing));
}

bool operator==(const TypingChain& a, const TypingChain& b) {
  if (a.graphs_.size() != b.graphs_.size()) return false;
  for (std::size_t i = 0; i < a.graphs_.size(); ++i) {
    if (!same_graph(a.graphs_[i], b.graphs_[i])) return false;
  }
  return a.typing_ == b.typing_;
}

std::vector<PartialGraphMorphism> close_direct_types(const GraphRef& subject, const TypingChain& target,
                                                     std::size_t top, const Declarations& decls) {
  if (top == 0 || top > target.depth() + 1) throw Error(Errc::ChainMismatch, "invalid closure level");
  std::vector<std::map<ElementId, std::string>> types(top);
  std::map<ElementId, std::size_t> direct_level;

  for (const auto& d : decls.direct) {
    if (!subject->contains(d.element)) {
      throw Error(Errc::UnknownElement, "type annotation for unknown element " + d.element.name);
    }
    if (d.level >= top) {
      throw Error(Errc::InvalidTyping, "element " + d.element.name + " is typed at level " + std::to_string(d.level) +
                                           ", which is not strictly above it");
    }
    if (!has_element(target.graph(d.level), d.element.kind, d.type)) {
      throw Error(Errc::DanglingTypeReference, "type " + d.type + " of " + d.element.name + " does not exist at level " +
                                                   std::to_string(d.level));
    }
    if (!direct_level.emplace(d.element, d.level).second) {
      throw Error(Errc::InvalidTyping, "element " + d.element.name + " has two direct types");
    }
    types[d.level][d.element] = d.type;
    const ElementId type_id{d.element.kind, d.type};
    for (std::size_t k = 0; k < d.level; ++k) {
      if (auto t = target.typing(d.level, k).image(type_id)) types[k][d.element] = t->name;
    }
  }

  for (const auto& o : decls.overrides) {
    if (!subject->contains(o.element)) {
      throw Error(Errc::UnknownElement, "typing override for unknown element " + o.element.name);
    }
    auto it = direct_level.find(o.element);
    if (it == direct_level.end() || o.level >= it->second) {
      throw Error(Errc::InvalidTyping, "typing override for " + o.element.name + " must lie below its direct type");
    }
    if (o.type) {
      if (!has_element(target.graph(o.level), o.element.kind, *o.type)) {
        throw Error(Errc::DanglingTypeReference, "type " + *o.type + " does not exist at level " +
                                                     std::to_string(o.level));
      }
      types[o.level][o.element] = *o.type;
    } else {
      types[o.level].erase(o.element);
    }
  }

  std::vector<PartialGraphMorphism> out;
  out.reserve(top);
  for (std::size_t k = 0; k < top; ++k) {
    ElementSet members;
    NameMap nodes, arrows;
    for (const auto& [e, t] : types[k]) {
      members.insert(e);
      (e.kind == ElementKind::Node ? nodes : arrows).emplace(e.name, t);
    }
    try {
      auto def = share(subgraph_of(*subject, members));
      out.emplace_back(subject, target.graph_ref(k),
                       GraphMorphism(def, target.graph_ref(k), std::move(nodes), std::move(arrows)));
    } catch (const Error& err) {
      throw Error(Errc::InvalidTyping, "typing at level " + std::to_string(k) + ": " + err.what());
    }
  }
  return out;
}

TypingChain TypingChain::from_direct_types(std::vector<GraphRef> graphs, const std::vector<Declarations>& decls) {
  auto chain = closure(std::move(graphs), decls);
  auto report = validate_chain(chain);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(Errc::ChainAxiomViolation, std::string(to_string(v.axiom)) + " axiom violated at " + v.element.name +
                                               ": " + v.detail);
  }
  return chain;
}

TypingChain TypingChain::closure(std::vector<GraphRef> graphs, const std::vector<Declarations>& decls) {
  if (graphs.empty()) throw Error(Errc::ChainMismatch, "a typing chain needs at least one graph");
  if (decls.size() != graphs.size()) throw Error(Errc::ChainMismatch, "one declaration block per graph expected");
  if (!decls[0].direct.empty() || !decls[0].overrides.empty()) {
    throw Error(Errc::InvalidTyping, "the top graph cannot carry type annotations");
  }
  TypingChain chain = single(graphs[0]);
  for (std::size_t level = 1; level < graphs.size(); ++level) {
    auto row = close_direct_types(graphs[level], chain, level, decls[level]);
    std::vector<GraphRef> gs = chain.graphs_;
    gs.push_back(graphs[level]);
    auto typing = chain.typing_;
    typing.push_back(std::move(row));
    chain = TypingChain(std::move(gs), std::move(typing));
  }
  return chain;
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Total: return "Total";
    case Axiom::Transitive: return "Transitive";
    case Axiom::Connex: return "Connex";
  }
  return "?";
}

ValidationReport validate_chain(const TypingChain& chain) {
  ValidationReport report;
  const std::size_t n = chain.depth();
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& t = chain.typing(j, 0);
    for (const auto& e : chain.graph(j).elements()) {
      if (!t.defined(e)) {
        report.violations.push_back({Axiom::Total, j, 0, 0, e, "typing " + levels_text(j, 0) + " is undefined"});
      }
    }
  }
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const auto& tkj = chain.typing(k, j);
        const auto& tki = chain.typing(k, i);
        auto composite = compose_partial(tkj, chain.typing(j, i));
        for (const auto& e : composite.def().elements()) {
          auto direct = tki.image(e);
          auto via = composite.image(e);
          if (!direct || *direct != *via) {
            report.violations.push_back({Axiom::Transitive, k, j, i, e,
                                         "composite typing through level " + std::to_string(j) +
                                             " is not below typing " + levels_text(k, i)});
          }
        }
        for (const auto& e : chain.graph(k).elements()) {
          if (!tkj.defined(e) || !tki.defined(e)) continue;
          auto via = composite.image(e);
          if (!via || *via != *tki.image(e)) {
            report.violations.push_back({Axiom::Connex, k, j, i, e,
                                         "typed at levels " + std::to_string(j) + " and " + std::to_string(i) +
                                             " but the types are not connected"});
          }
        }
      }
    }
  }
  return report;
}

std::optional<DirectType> direct_type(const TypingChain& chain, std::size_t level, const ElementId& e) {
  if (level == 0 || level > chain.depth()) {
    throw Error(Errc::ChainMismatch, "direct types exist only for levels 1.." + std::to_string(chain.depth()));
  }
  if (!chain.graph(level).contains(e)) throw Error(Errc::UnknownElement, "unknown element " + e.name);
  for (std::size_t m = level; m-- > 0;) {
    if (auto t = chain.typing(level, m).image(e)) return DirectType{m, *t};
  }
  return std::nullopt;
}

std::vector<DirectType> transitive_types(const TypingChain& chain, std::size_t level, const ElementId& e) {
  auto direct = direct_type(chain, level, e);
  std::vector<DirectType> out;
  if (!direct) return out;
  for (std::size_t k = direct->level; k-- > 0;) {
    if (auto t = chain.typing(level, k).image(e)) out.push_back({k, *t});
  }
  return out;
}

}  // namespace mltg
