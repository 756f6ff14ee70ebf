#include "oracles.hpp"

#include <functional>

#include <algorithm>
#include <map>
#include <sstream>

#include "mltg/error.hpp"
#include "mltg/match.hpp"

namespace mltg::oracle {

namespace {

std::vector<std::string> names_of(const NameSet& s) { return {s.begin(), s.end()}; }

std::vector<std::string> names_of(const ArrowTable& t) {
  std::vector<std::string> out;
  for (const auto& [name, _] : t) out.push_back(name);
  return out;
}

// Calls visit(digits) for every vector in [0, base)^size, most significant first.
template <typename Visit>
void odometer(std::size_t size, std::size_t base, Visit&& visit) {
  if (size > 0 && base == 0) return;
  std::vector<std::size_t> digits(size, 0);
  while (true) {
    visit(digits);
    std::size_t k = size;
    while (k > 0) {
      --k;
      if (++digits[k] < base) break;
      digits[k] = 0;
      if (k == 0) return;
    }
    if (size == 0) return;
  }
}

std::string key(const GraphMorphism& m) {
  std::string out;
  for (const auto& [a, b] : m.node_map()) out += a + "=" + b + ";";
  out += "|";
  for (const auto& [a, b] : m.arrow_map()) out += a + "=" + b + ";";
  return out;
}

std::string describe(const std::string& what, const Graph& probe) {
  std::ostringstream os;
  os << what << " for probe " << probe;
  return os.str();
}

Graph loop_graph(int loops) {
  Graph g;
  g.add_node("o");
  for (int k = 0; k < loops; ++k) g.add_arrow("l" + std::to_string(k), "o", "o");
  return g;
}

}  // namespace

std::vector<GraphMorphism> all_homs(const GraphRef& a, const GraphRef& b) {
  const auto an = names_of(a->nodes());
  const auto bn = names_of(b->nodes());
  const auto aa = names_of(a->arrows());
  const auto ba = names_of(b->arrows());
  std::vector<GraphMorphism> out;
  odometer(an.size(), bn.size(), [&](const std::vector<std::size_t>& nd) {
    NameMap nodes;
    for (std::size_t k = 0; k < an.size(); ++k) nodes.emplace(an[k], bn[nd[k]]);
    std::vector<std::vector<std::string>> choices;
    for (const auto& arrow : aa) {
      const auto& e = a->ends(arrow);
      auto& c = choices.emplace_back();
      for (const auto& cand : ba) {
        const auto& f = b->ends(cand);
        if (f.source == nodes.at(e.source) && f.target == nodes.at(e.target)) c.push_back(cand);
      }
      if (c.empty()) return;
    }
    std::vector<std::size_t> pick(aa.size(), 0);
    while (true) {
      NameMap arrows;
      for (std::size_t k = 0; k < aa.size(); ++k) arrows.emplace(aa[k], choices[k][pick[k]]);
      out.emplace_back(a, b, nodes, std::move(arrows));
      std::size_t k = aa.size();
      bool done = true;
      while (k > 0) {
        --k;
        if (++pick[k] < choices[k].size()) {
          done = false;
          break;
        }
        pick[k] = 0;
      }
      if (done) break;
    }
  });
  std::sort(out.begin(), out.end(), [](const GraphMorphism& x, const GraphMorphism& y) {
    return std::tie(x.node_map(), x.arrow_map()) < std::tie(y.node_map(), y.arrow_map());
  });
  return out;
}

std::vector<LevelMap> all_level_maps(std::size_t n, std::size_t m) {
  std::vector<LevelMap> out;
  odometer(n, m + 1, [&](const std::vector<std::size_t>& tail) {
    std::vector<std::size_t> f{0};
    f.insert(f.end(), tail.begin(), tail.end());
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (f[j] < f[i] || f[j] - f[i] < j - i) return;
      }
    }
    out.emplace_back(m, f);
  });
  return out;
}

namespace {

// The law for one pair of levels j > i.
bool pair_law_holds(const TypingChain& src, const TypingChain& dst, const LevelMap& f, const GraphMorphism& phi_j,
                    const GraphMorphism& phi_i, std::size_t j, std::size_t i, bool closed) {
  const auto& tg = src.typing(j, i);
  const auto& th = dst.typing(f(j), f(i));
  for (const auto& e : src.graph(j).elements()) {
    auto tx = th.image(phi_j(e));
    auto te = tg.image(e);
    if (te) {
      if (!tx || *tx != phi_i(*te)) return false;
    } else if (closed && tx) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool chain_law_holds(const TypingChainMorphism& m, bool closed) {
  for (std::size_t j = 1; j <= m.src().depth(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!pair_law_holds(m.src(), m.dst(), m.levels(), m.map(j), m.map(i), j, i, closed)) return false;
    }
  }
  return true;
}

std::vector<TypingChainMorphism> all_chain_morphisms(const ChainRef& mm, const ChainRef& tg, const LevelMap& f,
                                                     const std::set<Constant>& constants) {
  // Product of all level homomorphisms; a partial family is dropped as soon
  // as one pair of its levels violates the law or a constant is moved.
  std::vector<std::vector<GraphMorphism>> per_level;
  for (std::size_t i = 0; i <= mm->depth(); ++i) {
    std::vector<GraphMorphism> keep;
    for (auto& h : all_homs(mm->graph_ref(i), tg->graph_ref(f(i)))) {
      bool ok = true;
      for (const auto& c : constants) {
        if (c.level == i && h(c.element).name != c.element.name) ok = false;
      }
      if (ok) keep.push_back(std::move(h));
    }
    per_level.push_back(std::move(keep));
  }
  std::vector<TypingChainMorphism> out;
  std::vector<GraphMorphism> family;
  std::function<void(std::size_t)> extend = [&](std::size_t j) {
    if (j == per_level.size()) {
      TypingChainMorphism beta(mm, tg, f, family);
      if (chain_law_holds(beta)) out.push_back(std::move(beta));
      return;
    }
    for (const auto& h : per_level[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = pair_law_holds(*mm, *tg, f, h, family[i], j, i, false);
      if (!ok) continue;
      family.push_back(h);
      extend(j + 1);
      family.pop_back();
    }
  };
  extend(0);
  return out;
}

std::vector<MatchCandidate> all_matches(const Rule& rule, const MultilevelTyping& host) {
  std::vector<MatchCandidate> out;
  if (rule.depth() > host.depth()) return out;
  const auto& left = rule.left();
  auto homs = all_homs(left.chain().host_ref(), host.chain().host_ref());
  for (const auto& f : all_level_maps(rule.depth(), host.depth())) {
    // Necessary condition independent of beta: L_i is the preimage of S_f(i).
    std::vector<const GraphMorphism*> reducts;
    for (const auto& mu : homs) {
      bool ok = true;
      for (std::size_t i = 1; i <= rule.depth() && ok; ++i) {
        ok = preimage(mu, host.chain().level(f(i))) == left.chain().level(i);
      }
      if (ok) reducts.push_back(&mu);
    }
    for (const auto& beta : all_chain_morphisms(rule.meta_ref(), host.target_ref(), f, rule.constants())) {
      for (const auto* mu : reducts) {
        bool typed = true;
        for (const auto& e : left.subject().elements()) {
          auto t = left.type_at(0, e);
          auto u = host.type_at(0, (*mu)(e));
          if (!t || !u || beta.map(0)(*t) != *u) {
            typed = false;
            break;
          }
        }
        if (typed && check_match(rule, host, *mu, beta).ok()) out.push_back(make_match(rule, host, *mu, beta));
      }
    }
  }
  return out;
}

std::vector<GraphRef> cone_probes() {
  return {share(Graph{}),
          share(make_graph({"x"})),
          share(make_graph({"x", "y"})),
          share(make_graph({"x", "y"}, {{"e", "x", "y"}})),
          share(make_graph({"x"}, {{"e", "x", "x"}})),
          share(make_graph({"x", "y"}, {{"e", "x", "y"}, {"k", "x", "y"}})),
          share(make_graph({"x", "y", "z"}, {{"e", "x", "y"}, {"k", "y", "z"}}))};
}

std::vector<GraphRef> cocone_probes() {
  return {share(loop_graph(1)), share(loop_graph(2)),
          share(make_graph({"p", "q"}, {{"pp", "p", "p"}, {"pq", "p", "q"}, {"qp", "q", "p"}, {"qq", "q", "q"}}))};
}

std::string check_pullback(const GraphMorphism& f, const GraphMorphism& g, const Pullback& pb) {
  if (!(compose(pb.first, f) == compose(pb.second, g))) return "pullback square does not commute";
  for (const auto& x : cone_probes()) {
    std::map<std::string, std::size_t> cones;
    std::map<std::string, std::vector<std::string>> by_composite_a;
    for (const auto& xa : all_homs(x, f.dom_ref())) by_composite_a[key(compose(xa, f))].push_back(key(xa));
    for (const auto& xb : all_homs(x, g.dom_ref())) {
      auto it = by_composite_a.find(key(compose(xb, g)));
      if (it == by_composite_a.end()) continue;
      for (const auto& ka : it->second) cones[ka + "/" + key(xb)] = 0;
    }
    for (const auto& u : all_homs(x, pb.object)) {
      auto it = cones.find(key(compose(u, pb.first)) + "/" + key(compose(u, pb.second)));
      if (it == cones.end()) return describe("mediating map gives no cone", *x);
      ++it->second;
    }
    for (const auto& [_, count] : cones) {
      if (count != 1) return describe(std::to_string(count) + " mediating maps for a cone", *x);
    }
  }
  return {};
}

std::string check_pushout(const GraphMorphism& lambda, const GraphMorphism& mu, const Pushout& po) {
  if (!(compose(lambda, po.extension) == compose(mu, po.inclusion))) return "pushout square does not commute";
  for (const auto& y : cocone_probes()) {
    std::map<std::string, std::vector<std::string>> h_by_restriction;
    for (const auto& h : all_homs(lambda.cod_ref(), y)) h_by_restriction[key(compose(lambda, h))].push_back(key(h));
    std::map<std::string, std::size_t> cocones;
    for (const auto& k : all_homs(mu.cod_ref(), y)) {
      auto it = h_by_restriction.find(key(compose(mu, k)));
      if (it == h_by_restriction.end()) continue;
      for (const auto& kh : it->second) cocones[kh + "/" + key(k)] = 0;
    }
    for (const auto& u : all_homs(po.object, y)) {
      auto it = cocones.find(key(compose(po.extension, u)) + "/" + key(compose(po.inclusion, u)));
      if (it == cocones.end()) return describe("mediating map gives no cocone", *y);
      ++it->second;
    }
    for (const auto& [_, count] : cocones) {
      if (count != 1) return describe(std::to_string(count) + " mediating maps for a cocone", *y);
    }
  }
  return {};
}

bool has_identification_conflict(const GraphMorphism& rho, const GraphMorphism& delta) {
  const Graph& r = rho.dom();
  for (const auto& x : difference(rho.cod(), r)) {
    for (const auto& y : r.elements()) {
      if (delta(x) == delta(y)) return true;
    }
  }
  return false;
}

std::string check_final_pullback_complement(const GraphMorphism& rho, const GraphMorphism& delta,
                                            const PullbackComplement& pc) {
  if (!(compose(pc.comatch, pc.inclusion) == compose(rho, delta))) return "complement square does not commute";
  auto pb = check_pullback(pc.inclusion, delta, Pullback{rho.dom_ref(), pc.comatch, rho});
  if (!pb.empty()) return "not a pullback: " + pb;

  const Graph& d = delta.cod();
  const Graph& t = *pc.object;
  const auto nodes = names_of(d.nodes());
  // Every subgraph T' of D with δ⁻¹(T') = R must lie inside T.
  std::size_t complements = 0;
  bool larger = false;
  odometer(nodes.size(), 2, [&](const std::vector<std::size_t>& node_bits) {
    Graph base;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (node_bits[k]) base.add_node(nodes[k]);
    }
    std::vector<std::pair<std::string, ArrowEnds>> arrows;
    for (const auto& [a, e] : d.arrows()) {
      if (base.has_node(e.source) && base.has_node(e.target)) arrows.emplace_back(a, e);
    }
    odometer(arrows.size(), 2, [&](const std::vector<std::size_t>& arrow_bits) {
      Graph candidate = base;
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (arrow_bits[k]) candidate.add_arrow(arrows[k].first, arrows[k].second.source, arrows[k].second.target);
      }
      for (const auto& x : rho.cod().elements()) {
        if (rho.dom().contains(x) != candidate.contains(delta(x))) return;
      }
      ++complements;
      if (!is_subgraph(candidate, t)) larger = true;
    });
  });
  if (larger) return "a pullback complement is not contained in the result";
  if (complements == 0) return "the result is not among the enumerated pullback complements";

  // Morphisms from probes whose pullback along δ lands in R factor through T.
  for (const auto& x : cone_probes()) {
    for (const auto& dx : all_homs(x, delta.cod_ref())) {
      bool lands_in_r = true;
      for (const auto& e : x->elements()) {
        for (const auto& y : rho.cod().elements()) {
          if (delta(y) == dx(e) && !rho.dom().contains(y)) lands_in_r = false;
        }
      }
      if (!lands_in_r) continue;
      for (const auto& e : x->elements()) {
        if (!t.contains(dx(e))) return describe("a morphism does not factor through the complement", *x);
      }
    }
  }
  return {};
}

bool left_squares_pullback_oracle(const InclusionChain& g, const InclusionChain& h, const LevelMap& f,
                                  const std::vector<GraphMorphism>& phi) {
  for (std::size_t j = 1; j <= g.depth(); ++j) {
    auto left = compose(GraphMorphism::inclusion(g.level_ref(j), g.host_ref()), phi[0]);
    auto right = compose(phi[j], GraphMorphism::inclusion(h.level_ref(f(j)), h.host_ref()));
    if (!(left == right)) return false;
    auto pb = pullback(GraphMorphism::inclusion(h.level_ref(f(j)), h.host_ref()), phi[0]);
    if (!(pb.second.image() == g.level(j))) return false;
  }
  return true;
}

bool closed_intersections_oracle(const InclusionChain& g, const InclusionChain& h, const LevelMap& f,
                                 const std::vector<GraphMorphism>& phi) {
  try {
    TypingChainMorphism m(g.chain_ref(), h.chain_ref(), f, phi);
    if (!chain_law_holds(m, true)) return false;
  } catch (const Error&) {
    return false;
  }
  for (std::size_t j = 1; j <= g.depth(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto a = share(intersection(g.level(j), g.level(i)));
      auto b = share(intersection(h.level(f(j)), h.level(f(i))));
      for (const auto& e : a->elements()) {
        if (phi[j](e) != phi[i](e) || !b->contains(phi[j](e))) return false;
      }
      for (std::size_t level : {j, i}) {
        auto pb = pullback(GraphMorphism::inclusion(b, h.level_ref(f(level))), phi[level]);
        if (!(pb.second.image() == *a)) return false;
      }
    }
  }
  return true;
}

std::string check_levelwise_pushouts(const Rule& rule, const MatchCandidate& match, const MultilevelTyping& host,
                                     const ApplicationResult& result) {
  const auto& f = match.levels();
  const auto& d = result.d.chain();
  for (std::size_t i = 0; i <= rule.depth(); ++i) {
    const auto& li = rule.left().chain().level_ref(i);
    const auto& ii = rule.interface().chain().level_ref(i);
    const auto& si = host.chain().level_ref(f(i));
    auto po = pushout_inclusion(GraphMorphism::inclusion(li, ii), match.mu.restrict(li).corestrict(si),
                                all_names(host.subject()), all_names(rule.union_graph()));
    const std::string at = " at rule level " + std::to_string(i);
    if (!(*po.object == d.level(f(i)))) return "level-wise pushout differs from D" + at;
    const auto& di = result.delta.map(i);
    if (po.extension.node_map() != di.node_map() || po.extension.arrow_map() != di.arrow_map()) {
      return "level-wise pushout extension differs from δ" + at;
    }
    if (!(intersection(d.level(f(i)), host.subject()) == host.chain().level(f(i)))) {
      return "D_f(i) ∩ S differs from S_f(i)" + at;
    }
    if (!(preimage(result.delta.map(0), d.level(f(i))) == *ii)) return "δ⁻¹(D_f(i)) differs from I_i" + at;
  }
  return {};
}

std::string check_domain_law(const TypingChain& chain) {
  for (std::size_t k = 2; k <= chain.depth(); ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const auto& kj = chain.typing(k, j);
        const auto& ki = chain.typing(k, i);
        const auto& ji = chain.typing(j, i);
        ElementSet expected;
        for (const auto& e : chain.graph(k).elements()) {
          auto t = kj.image(e);
          if (t && ji.defined(*t)) expected.insert(e);
        }
        ElementSet both;
        for (const auto& e : chain.graph(k).elements()) {
          if (kj.defined(e) && ki.defined(e)) both.insert(e);
        }
        const std::string at = " for " + std::to_string(k) + " > " + std::to_string(j) + " > " + std::to_string(i);
        if (both != expected) return "dom(τkj) ∩ dom(τki) differs from dom(τkj;τji)" + at;
        auto composed = compose_partial(kj, ji).def().elements();
        if (ElementSet(composed.begin(), composed.end()) != expected) return "composition domain differs" + at;
      }
    }
  }
  return {};
}

}  // namespace mltg::oracle
