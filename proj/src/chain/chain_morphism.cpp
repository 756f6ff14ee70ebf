#include "mltg/chain.hpp"
#include "mltg/error.hpp"

namespace mltg {

bool same_chain(const ChainRef& a, const ChainRef& b) { return a == b || *a == *b; }

TypingChainMorphism::TypingChainMorphism(ChainRef src, ChainRef dst, LevelMap levels, std::vector<GraphMorphism> maps)
    : src_(std::move(src)), dst_(std::move(dst)), levels_(std::move(levels)), maps_(std::move(maps)) {
  if (levels_.source_depth() != src_->depth() || levels_.target_depth() != dst_->depth()) {
    throw Error(Errc::ChainMismatch, "level map does not fit the chain depths");
  }
  if (maps_.size() != src_->depth() + 1) throw Error(Errc::ChainMismatch, "one map per source level expected");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (!same_graph(maps_[i].dom_ref(), src_->graph_ref(i)) ||
        !same_graph(maps_[i].cod_ref(), dst_->graph_ref(levels_(i)))) {
      throw Error(Errc::ChainMismatch, "map at level " + std::to_string(i) + " has the wrong signature");
    }
  }
}

TypingChainMorphism TypingChainMorphism::identity(const ChainRef& chain) {
  std::vector<GraphMorphism> maps;
  for (std::size_t i = 0; i <= chain->depth(); ++i) maps.push_back(GraphMorphism::identity(chain->graph_ref(i)));
  return TypingChainMorphism(chain, chain, LevelMap::identity(chain->depth()), std::move(maps));
}

bool operator==(const TypingChainMorphism& a, const TypingChainMorphism& b) {
  return a.levels_ == b.levels_ && a.maps_ == b.maps_ && same_chain(a.src_, b.src_) && same_chain(a.dst_, b.dst_);
}

namespace {

// Left and right sides of the compatibility law at (j, i).
std::pair<PartialGraphMorphism, PartialGraphMorphism> law_sides(const TypingChainMorphism& m, std::size_t j,
                                                                 std::size_t i) {
  const auto& f = m.levels();
  auto lhs = compose_partial(m.src().typing(j, i), PartialGraphMorphism::total(m.map(i)));
  auto rhs = compose_partial(PartialGraphMorphism::total(m.map(j)), m.dst().typing(f(j), f(i)));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace

std::vector<CompatibilityViolation> compatibility_violations(const TypingChainMorphism& m) {
  std::vector<CompatibilityViolation> out;
  const std::size_t n = m.src().depth();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto [lhs, rhs] = law_sides(m, j, i);
      for (const auto& e : lhs.def().elements()) {
        auto r = rhs.image(e);
        if (!r) {
          out.push_back({j, i, e, "image at level " + std::to_string(m.levels()(j)) + " is not typed at level " +
                                      std::to_string(m.levels()(i))});
        } else if (*r != *lhs.image(e)) {
          out.push_back({j, i, e, "typed as " + lhs.image(e)->name + " but its image is typed as " + r->name});
        }
      }
    }
  }
  return out;
}

bool is_chain_morphism(const TypingChainMorphism& m) { return compatibility_violations(m).empty(); }

bool is_closed(const TypingChainMorphism& m) {
  const std::size_t n = m.src().depth();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto [lhs, rhs] = law_sides(m, j, i);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

TypingChainMorphism compose_chain_morphisms(const TypingChainMorphism& a, const TypingChainMorphism& b) {
  if (!same_chain(a.dst_ref(), b.src_ref())) throw Error(Errc::ChainMismatch, "chain morphisms are not composable");
  std::vector<GraphMorphism> maps;
  for (std::size_t i = 0; i <= a.src().depth(); ++i) maps.push_back(compose(a.map(i), b.map(a.levels()(i))));
  return TypingChainMorphism(a.src_ref(), b.dst_ref(), compose(a.levels(), b.levels()), std::move(maps));
}

Reduct reduct(const InclusionChain& target, const GraphMorphism& phi0, const LevelMap& f) {
  if (!same_graph(phi0.cod_ref(), target.host_ref())) {
    throw Error(Errc::CodomainMismatch, "reduct base map must land in the host of the target chain");
  }
  if (f.target_depth() != target.depth()) throw Error(Errc::ChainMismatch, "level map does not fit the target");
  std::vector<Graph> levels;
  levels.push_back(phi0.dom());
  for (std::size_t j = 1; j <= f.source_depth(); ++j) levels.push_back(preimage(phi0, target.level(f(j))));
  InclusionChain chain(std::move(levels));

  std::vector<GraphMorphism> maps;
  for (std::size_t j = 0; j <= f.source_depth(); ++j) {
    maps.push_back(phi0.restrict(chain.level_ref(j)).corestrict(target.level_ref(f(j))));
  }
  TypingChainMorphism morphism(chain.chain_ref(), target.chain_ref(), f, std::move(maps));
  return Reduct{std::move(chain), std::move(morphism)};
}

namespace {

bool signatures_fit(const InclusionChain& src, const InclusionChain& dst, const LevelMap& f,
                    const std::vector<GraphMorphism>& phi) {
  if (f.source_depth() != src.depth() || f.target_depth() != dst.depth() || phi.size() != src.depth() + 1) {
    return false;
  }
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!same_graph(phi[i].dom_ref(), src.level_ref(i)) || !same_graph(phi[i].cod_ref(), dst.level_ref(f(i)))) {
      return false;
    }
  }
  return true;
}

// Square A ↪ X, A → B (via phi restricted), B ↪ Y, X → Y (phi) with both
// vertical legs inclusions: it commutes and is a pullback iff phi maps A
// into B and A is exactly the preimage of B.
bool inclusion_square_is_pullback(const Graph& a, const GraphMorphism& phi, const Graph& b) {
  return preimage(phi, b) == a;
}

}  // namespace

bool left_squares_are_pullbacks(const InclusionChain& src, const InclusionChain& dst, const LevelMap& f,
                                const std::vector<GraphMorphism>& phi) {
  if (!signatures_fit(src, dst, f, phi)) return false;
  const auto& phi0 = phi[0];
  for (std::size_t j = 1; j <= src.depth(); ++j) {
    const Graph& gj = src.level(j);
    for (const auto& x : gj.nodes()) {
      if (phi[j].node(x) != phi0.node(x)) return false;
    }
    for (const auto& [a, _] : gj.arrows()) {
      if (phi[j].arrow(a) != phi0.arrow(a)) return false;
    }
    if (!inclusion_square_is_pullback(gj, phi0, dst.level(f(j)))) return false;
  }
  return true;
}

bool closed_with_intersection_pullbacks(const InclusionChain& src, const InclusionChain& dst, const LevelMap& f,
                                        const std::vector<GraphMorphism>& phi) {
  if (!signatures_fit(src, dst, f, phi)) return false;
  TypingChainMorphism m(src.chain_ref(), dst.chain_ref(), f, phi);
  if (!is_chain_morphism(m) || !is_closed(m)) return false;
  for (std::size_t j = 1; j <= src.depth(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Graph a = intersection(src.level(j), src.level(i));
      Graph b = intersection(dst.level(f(j)), dst.level(f(i)));
      // φ_{j|i} exists and agrees with φ_j and φ_i on the intersection.
      for (const auto& id : a.elements()) {
        auto via_j = phi[j](id);
        if (via_j != phi[i](id) || !b.contains(via_j)) return false;
      }
      if (!inclusion_square_is_pullback(a, phi[j], b)) return false;
      if (!inclusion_square_is_pullback(a, phi[i], b)) return false;
    }
  }
  return true;
}

bool is_reduct_morphism(const InclusionChain& src, const InclusionChain& dst, const TypingChainMorphism& m) {
  if (!same_chain(m.src_ref(), src.chain_ref()) || !same_chain(m.dst_ref(), dst.chain_ref())) return false;
  return left_squares_are_pullbacks(src, dst, m.levels(), m.maps());
}

MultilevelTyping::MultilevelTyping(InclusionChain chain, TypingChainMorphism typing)
    : chain_(std::move(chain)), typing_(std::move(typing)) {
  if (!same_chain(typing_.src_ref(), chain_.chain_ref())) {
    throw Error(Errc::InvalidTyping, "typing does not start at the subject's inclusion chain");
  }
  if (typing_.dst().depth() != chain_.depth() || !typing_.levels().is_identity()) {
    throw Error(Errc::InvalidTyping, "a multilevel typing uses the identity level map");
  }
  auto violations = compatibility_violations(typing_);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(Errc::InvalidTyping, "typing of " + v.element.name + " between levels " + std::to_string(v.j) +
                                         " and " + std::to_string(v.i) + ": " + v.detail);
  }
}

MultilevelTyping MultilevelTyping::from_direct_types(Graph subject, ChainRef target, const Declarations& decls) {
  auto subj = share(std::move(subject));
  auto partial = close_direct_types(subj, *target, target->depth() + 1, decls);
  if (!partial[0].is_total()) {
    for (const auto& e : subj->elements()) {
      if (!partial[0].defined(e)) throw Error(Errc::InvalidTyping, "element " + e.name + " has no type");
    }
  }
  std::vector<Graph> levels;
  for (const auto& p : partial) levels.push_back(p.def());
  InclusionChain chain(std::move(levels));
  std::vector<GraphMorphism> maps;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    const auto& m = partial[i].map();
    maps.emplace_back(chain.level_ref(i), target->graph_ref(i), m.node_map(), m.arrow_map());
  }
  TypingChainMorphism typing(chain.chain_ref(), target, LevelMap::identity(target->depth()), std::move(maps));
  return MultilevelTyping(std::move(chain), std::move(typing));
}

MultilevelTyping MultilevelTyping::from_level_types(Graph subject, ChainRef target,
                                                    const std::vector<std::map<ElementId, std::string>>& types) {
  if (types.size() != target->depth() + 1) throw Error(Errc::DepthMismatch, "one type table per level expected");
  std::vector<Graph> levels;
  std::vector<std::pair<NameMap, NameMap>> tables;
  for (std::size_t a = 0; a < types.size(); ++a) {
    ElementSet members;
    NameMap nodes, arrows;
    for (const auto& [e, t] : types[a]) {
      members.insert(e);
      (e.kind == ElementKind::Node ? nodes : arrows).emplace(e.name, t);
    }
    try {
      levels.push_back(a == 0 ? subject : subgraph_of(subject, members));
    } catch (const Error& err) {
      throw Error(Errc::InvalidTyping, "level " + std::to_string(a) + ": " + err.what());
    }
    tables.emplace_back(std::move(nodes), std::move(arrows));
  }
  InclusionChain chain(std::move(levels));
  std::vector<GraphMorphism> maps;
  for (std::size_t a = 0; a < tables.size(); ++a) {
    try {
      maps.emplace_back(chain.level_ref(a), target->graph_ref(a), tables[a].first, tables[a].second);
    } catch (const Error& err) {
      throw Error(Errc::InvalidTyping, "level " + std::to_string(a) + ": " + err.what());
    }
  }
  TypingChainMorphism typing(chain.chain_ref(), std::move(target), LevelMap::identity(tables.size() - 1),
                             std::move(maps));
  return MultilevelTyping(std::move(chain), std::move(typing));
}

std::optional<ElementId> MultilevelTyping::type_at(std::size_t level, const ElementId& e) const {
  if (!chain_.level(level).contains(e)) return std::nullopt;
  return typing_.map(level)(e);
}

DirectType MultilevelTyping::direct_type(const ElementId& e) const {
  if (!subject().contains(e)) throw Error(Errc::UnknownElement, "unknown element " + e.name);
  for (std::size_t a = depth() + 1; a-- > 0;) {
    if (auto t = type_at(a, e)) return DirectType{a, *t};
  }
  throw Error(Errc::InvalidTyping, "element " + e.name + " is untyped");
}

Declarations MultilevelTyping::declarations() const {
  Declarations out;
  for (const auto& e : subject().elements()) {
    auto d = direct_type(e);
    out.direct.push_back({e, d.level, d.element.name});
    const ElementId type_id = d.element;
    for (std::size_t k = 0; k < d.level; ++k) {
      auto closed = target().typing(d.level, k).image(type_id);
      auto actual = type_at(k, e);
      if (closed == actual) continue;
      if (actual) {
        out.overrides.push_back({e, k, actual->name});
      } else {
        out.overrides.push_back({e, k, std::nullopt});
      }
    }
  }
  return out;
}

bool MultilevelTyping::operator==(const MultilevelTyping& other) const {
  return chain_ == other.chain_ && typing_ == other.typing_;
}

}  // namespace mltg
