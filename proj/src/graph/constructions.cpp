#include "mltg/constructions.hpp"

#include "mltg/error.hpp"

namespace mltg {

std::string pair_name(std::string_view x, std::string_view y) {
  std::string out;
  out.reserve(x.size() + y.size() + 3);
  out += '(';
  out += x;
  out += ',';
  out += y;
  out += ')';
  return out;
}

Pullback pullback(const GraphMorphism& f, const GraphMorphism& g) {
  if (!same_graph(f.cod_ref(), g.cod_ref())) {
    throw Error(Errc::CodomainMismatch, "pullback of morphisms with different codomains");
  }
  Graph p;
  NameMap n1, n2, a1, a2;
  for (const auto& [x, fx] : f.node_map()) {
    for (const auto& [y, gy] : g.node_map()) {
      if (fx != gy) continue;
      auto name = pair_name(x, y);
      p.add_node(name);
      n1.emplace(name, x);
      n2.emplace(name, y);
    }
  }
  for (const auto& [a, fa] : f.arrow_map()) {
    for (const auto& [b, gb] : g.arrow_map()) {
      if (fa != gb) continue;
      const auto& ea = f.dom().ends(a);
      const auto& eb = g.dom().ends(b);
      auto name = pair_name(a, b);
      p.add_arrow(name, pair_name(ea.source, eb.source), pair_name(ea.target, eb.target));
      a1.emplace(name, a);
      a2.emplace(name, b);
    }
  }
  auto obj = share(std::move(p));
  return Pullback{obj, GraphMorphism(obj, f.dom_ref(), std::move(n1), std::move(a1)),
                  GraphMorphism(obj, g.dom_ref(), std::move(n2), std::move(a2))};
}

std::string fresh_name(std::string_view base, const NameSet& taken) {
  for (std::size_t k = 2;; ++k) {
    std::string candidate = std::string(base) + "#" + std::to_string(k);
    if (!taken.contains(candidate)) return candidate;
  }
}

Pushout pushout_inclusion(const GraphMorphism& lambda, const GraphMorphism& mu, const NameSet& avoid,
                          const NameSet& reserve) {
  if (!lambda.is_inclusion() || !is_subgraph(lambda.dom(), lambda.cod())) {
    throw Error(Errc::NotInclusion, "pushout requires an inclusion on the left");
  }
  if (!same_graph(lambda.dom_ref(), mu.dom_ref())) {
    throw Error(Errc::CodomainMismatch, "pushout span legs have different domains");
  }
  const Graph& g = lambda.dom();
  const Graph& h = lambda.cod();
  const Graph& k = mu.cod();

  NameSet taken = all_names(k);
  for (const auto& n : avoid) taken.insert(n);
  NameSet reserved = taken;
  for (const auto& n : all_names(h)) reserved.insert(n);
  for (const auto& n : reserve) reserved.insert(n);

  NameMap renamed;
  auto place = [&](const std::string& name) {
    if (!taken.contains(name)) return name;
    auto fresh = fresh_name(name, reserved);
    reserved.insert(fresh);
    renamed.emplace(name, fresh);
    return fresh;
  };

  Graph p = k;
  NameMap star_nodes, star_arrows;
  for (const auto& x : h.nodes()) {
    if (g.has_node(x)) {
      star_nodes.emplace(x, mu.node(x));
    } else {
      auto name = place(x);
      p.add_node(name);
      star_nodes.emplace(x, name);
    }
  }
  for (const auto& [a, e] : h.arrows()) {
    if (g.has_arrow(a)) {
      star_arrows.emplace(a, mu.arrow(a));
    } else {
      auto name = place(a);
      // Endpoints that lie in G are redirected through mu.
      p.add_arrow(name, star_nodes.at(e.source), star_nodes.at(e.target));
      star_arrows.emplace(a, name);
    }
  }
  auto obj = share(std::move(p));
  return Pushout{obj, GraphMorphism::inclusion(mu.cod_ref(), obj),
                 GraphMorphism(lambda.cod_ref(), obj, std::move(star_nodes), std::move(star_arrows)),
                 std::move(renamed)};
}

PullbackComplement final_pullback_complement(const GraphMorphism& rho, const GraphMorphism& delta) {
  if (!rho.is_inclusion() || !is_subgraph(rho.dom(), rho.cod())) {
    throw Error(Errc::NotInclusion, "pullback complement requires an inclusion R ↪ I");
  }
  if (!same_graph(rho.cod_ref(), delta.dom_ref())) {
    throw Error(Errc::CodomainMismatch, "rho and delta are not composable");
  }
  const Graph& r = rho.dom();
  const Graph& i = rho.cod();
  const Graph& d = delta.cod();

  ElementSet deleted;
  for (const auto& id : difference(i, r)) deleted.insert(delta(id));
  for (const auto& id : r.elements()) {
    auto img = delta(id);
    if (deleted.contains(img)) {
      throw Error(Errc::IdentificationConflict,
                  "match identifies preserved " + id.name + " with a deleted element; no final pullback complement exists");
    }
  }

  Graph t;
  ElementSet dangling;
  for (const auto& x : d.nodes()) {
    if (!deleted.contains(ElementId::node(x))) t.add_node(x);
  }
  for (const auto& [a, e] : d.arrows()) {
    if (deleted.contains(ElementId::arrow(a))) continue;
    if (!t.has_node(e.source) || !t.has_node(e.target)) {
      dangling.insert(ElementId::arrow(a));
      continue;
    }
    t.add_arrow(a, e.source, e.target);
  }
  auto obj = share(std::move(t));

  // The square must be a pullback: x ∈ I lies in R exactly when delta(x) survives.
  for (const auto& id : i.elements()) {
    if (r.contains(id) != obj->contains(delta(id))) {
      throw Error(Errc::PullbackViolation, "pullback complement square is not a pullback at " + id.name);
    }
  }

  auto theta = GraphMorphism::inclusion(obj, delta.cod_ref());
  auto nu = compose(rho, delta).corestrict(obj);
  return PullbackComplement{obj, std::move(theta), std::move(nu), std::move(deleted), std::move(dangling)};
}

}  // namespace mltg
