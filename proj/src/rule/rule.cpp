#include "mltg/rule.hpp"

#include "mltg/error.hpp"

namespace mltg {

Rule::Rule(std::string name, MultilevelTyping left, MultilevelTyping right, MultilevelTyping interface,
           TypingChainMorphism lambda_chain, TypingChainMorphism rho_chain, std::set<Constant> constants)
    : name_(std::move(name)),
      left_(std::move(left)),
      right_(std::move(right)),
      interface_(std::move(interface)),
      lambda_chain_(std::move(lambda_chain)),
      rho_chain_(std::move(rho_chain)),
      constants_(std::move(constants)) {}

bool Rule::operator==(const Rule& other) const {
  return name_ == other.name_ && left_ == other.left_ && right_ == other.right_ && interface_ == other.interface_ &&
         constants_ == other.constants_;
}

namespace {

std::string at_level(std::size_t i) { return " at level " + std::to_string(i); }

void require_same(const Graph& a, const Graph& b, std::size_t level, const char* what) {
  if (a == b) return;
  auto extra = difference(a, b);
  if (extra.empty()) extra = difference(b, a);
  throw Error(Errc::CoherenceViolation,
              std::string(what) + " differ" + at_level(level) + " on element " + extra.begin()->name);
}

TypingChainMorphism inclusion_chain_morphism(const InclusionChain& sub, const InclusionChain& host) {
  std::vector<GraphMorphism> maps;
  for (std::size_t i = 0; i <= sub.depth(); ++i) {
    maps.push_back(GraphMorphism::inclusion(sub.level_ref(i), host.level_ref(i)));
  }
  return TypingChainMorphism(sub.chain_ref(), host.chain_ref(), LevelMap::identity(sub.depth()), std::move(maps));
}

}  // namespace

Rule build_rule(std::string name, MultilevelTyping left, MultilevelTyping right, std::set<Constant> constants) {
  if (left.depth() != right.depth()) throw Error(Errc::DepthMismatch, "left and right typings have different depths");
  if (!same_chain(left.target_ref(), right.target_ref())) {
    throw Error(Errc::ChainMismatch, "left and right sides are typed over different chains");
  }
  const TypingChain& mm = left.target();
  for (const auto& c : constants) {
    if (c.level > mm.depth() || !mm.graph(c.level).contains(c.element)) {
      throw Error(Errc::UnknownElement, "constant " + c.element.name + " is not in the rule's typing chain");
    }
  }

  const Graph& l = left.subject();
  const Graph& r = right.subject();
  Graph i_graph;
  try {
    i_graph = graph_union(l, r);
  } catch (const Error& e) {
    throw Error(Errc::CoherenceViolation, e.what());
  }

  const std::size_t n = left.depth();
  std::vector<std::map<ElementId, std::string>> types(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const Graph& li = left.chain().level(i);
    const Graph& ri = right.chain().level(i);
    Graph shared = intersection(li, ri);
    for (const auto& e : shared.elements()) {
      auto tl = *left.type_at(i, e);
      auto tr = *right.type_at(i, e);
      if (tl != tr) {
        throw Error(Errc::TypingDisagreement,
                    "element " + e.name + " is typed as " + tl.name + " on the left and " + tr.name + " on the right" +
                        at_level(i));
      }
    }
    require_same(intersection(li, r), intersection(l, ri), i, "L_i ∩ R and L ∩ R_i");
    require_same(intersection(li, r), shared, i, "L_i ∩ R and L_i ∩ R_i");

    for (const auto& e : li.elements()) types[i][e] = left.type_at(i, e)->name;
    for (const auto& e : ri.elements()) types[i][e] = right.type_at(i, e)->name;
  }

  auto interface = MultilevelTyping::from_level_types(std::move(i_graph), left.target_ref(), types);
  auto lambda_chain = inclusion_chain_morphism(left.chain(), interface.chain());
  auto rho_chain = inclusion_chain_morphism(right.chain(), interface.chain());

  if (!is_reduct_morphism(left.chain(), interface.chain(), lambda_chain) ||
      !is_reduct_morphism(right.chain(), interface.chain(), rho_chain)) {
    throw Error(Errc::CoherenceViolation, "rule sides are not reducts of the union chain");
  }
  if (!(compose_chain_morphisms(lambda_chain, interface.typing()) == left.typing()) ||
      !(compose_chain_morphisms(rho_chain, interface.typing()) == right.typing())) {
    throw Error(Errc::TypingDisagreement, "union typing does not factor the side typings");
  }

  return Rule(std::move(name), std::move(left), std::move(right), std::move(interface), std::move(lambda_chain),
              std::move(rho_chain), std::move(constants));
}

ElementSet rule_deletes(const Rule& rule) { return difference(rule.union_graph(), rule.rhs()); }

}  // namespace mltg
