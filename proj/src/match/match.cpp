#include "mltg/match.hpp"

#include <omp.h>

#include <algorithm>

#include "hom_search.hpp"
#include "mltg/error.hpp"

namespace mltg {

namespace {

template <typename Names>
std::vector<std::string> ordered(const Names& names) {
  std::vector<std::string> out;
  for (const auto& entry : names) {
    if constexpr (std::is_same_v<Names, NameSet>) {
      out.push_back(entry);
    } else {
      out.push_back(entry.first);
    }
  }
  return out;
}

int index_of(const std::vector<std::string>& sorted, const std::string& name) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), name) - sorted.begin());
}

}  // namespace

std::vector<GraphMorphism> enumerate_homomorphisms(const GraphRef& from, const GraphRef& to,
                                                   const CandidateFilter& filter, Execution execution) {
  const auto p_nodes = ordered(from->nodes());
  const auto p_arrows = ordered(from->arrows());
  const auto t_nodes = ordered(to->nodes());
  const auto t_arrows = ordered(to->arrows());

  detail::HomProblem problem;
  problem.pattern_nodes = p_nodes.size();
  problem.target_nodes = t_nodes.size();
  std::vector<int> out_degree(t_nodes.size(), 0);
  std::vector<int> in_degree(t_nodes.size(), 0);
  for (const auto& name : t_arrows) {
    const auto& e = to->ends(name);
    int s = index_of(t_nodes, e.source);
    int t = index_of(t_nodes, e.target);
    problem.target_arrows.emplace_back(s, t);
    ++out_degree[s];
    ++in_degree[t];
  }
  std::vector<char> p_out(p_nodes.size(), 0);
  std::vector<char> p_in(p_nodes.size(), 0);
  for (const auto& name : p_arrows) {
    const auto& e = from->ends(name);
    int s = index_of(p_nodes, e.source);
    int t = index_of(p_nodes, e.target);
    problem.pattern_arrows.emplace_back(s, t);
    p_out[s] = 1;
    p_in[t] = 1;
  }
  for (std::size_t v = 0; v < p_nodes.size(); ++v) {
    auto& cands = problem.node_candidates.emplace_back();
    for (std::size_t x = 0; x < t_nodes.size(); ++x) {
      if (p_out[v] && out_degree[x] == 0) continue;
      if (p_in[v] && in_degree[x] == 0) continue;
      if (filter && !filter(ElementId::node(p_nodes[v]), ElementId::node(t_nodes[x]))) continue;
      cands.push_back(static_cast<int>(x));
    }
  }
  for (std::size_t a = 0; a < p_arrows.size(); ++a) {
    auto& cands = problem.arrow_candidates.emplace_back();
    for (std::size_t b = 0; b < t_arrows.size(); ++b) {
      if (filter && !filter(ElementId::arrow(p_arrows[a]), ElementId::arrow(t_arrows[b]))) continue;
      cands.push_back(static_cast<int>(b));
    }
  }

  auto solutions = execution == Execution::Parallel ? detail::search_parallel(problem) : detail::search_serial(problem);
  std::vector<GraphMorphism> out;
  out.reserve(solutions.size());
  for (const auto& s : solutions) {
    NameMap nodes;
    NameMap arrows;
    for (std::size_t v = 0; v < p_nodes.size(); ++v) nodes.emplace(p_nodes[v], t_nodes[s.nodes[v]]);
    for (std::size_t a = 0; a < p_arrows.size(); ++a) arrows.emplace(p_arrows[a], t_arrows[s.arrows[a]]);
    out.emplace_back(from, to, std::move(nodes), std::move(arrows));
  }
  return out;
}

std::vector<LevelMap> enumerate_level_maps(std::size_t n, std::size_t m) {
  if (n > m) throw Error(Errc::DepthExceedsTarget, "rule depth exceeds hierarchy depth");
  std::vector<LevelMap> out;
  std::vector<std::size_t> values{0};
  auto extend = [&](auto&& self) -> void {
    std::size_t i = values.size();
    if (i == n + 1) {
      out.emplace_back(m, values);
      return;
    }
    // Leave room for the remaining n − i levels.
    for (std::size_t v = values.back() + 1; v + (n - i) <= m; ++v) {
      values.push_back(v);
      self(self);
      values.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<TypingChainMorphism> enumerate_chain_morphisms(const ChainRef& mm, const ChainRef& tg, const LevelMap& f,
                                                           const std::set<Constant>& constants) {
  if (f.source_depth() != mm->depth() || f.target_depth() != tg->depth()) {
    throw Error(Errc::ChainMismatch, "level map does not fit the chain depths");
  }
  std::vector<TypingChainMorphism> out;
  std::vector<GraphMorphism> family;
  auto extend = [&](auto&& self) -> void {
    std::size_t i = family.size();
    if (i == mm->depth() + 1) {
      out.emplace_back(mm, tg, f, family);
      return;
    }
    auto filter = [&](const ElementId& e, const ElementId& x) {
      for (const auto& c : constants) {
        if (c.level == i && c.element == e && x.name != e.name) return false;
      }
      for (std::size_t k = 0; k < i; ++k) {
        auto type = mm->typing(i, k).image(e);
        if (!type) continue;
        auto target_type = tg->typing(f(i), f(k)).image(x);
        if (!target_type || *target_type != family[k](*type)) return false;
      }
      return true;
    };
    for (auto& beta_i : enumerate_homomorphisms(mm->graph_ref(i), tg->graph_ref(f(i)), filter)) {
      family.push_back(std::move(beta_i));
      self(self);
      family.pop_back();
    }
  };
  extend(extend);
  return out;
}

namespace {

TypingChainMorphism reduct_morphism(const Rule& rule, const MultilevelTyping& host, const GraphMorphism& mu,
                                    const LevelMap& f) {
  std::vector<GraphMorphism> maps;
  for (std::size_t i = 0; i <= rule.depth(); ++i) {
    maps.push_back(mu.restrict(rule.left().chain().level_ref(i)).corestrict(host.chain().level_ref(f(i))));
  }
  return TypingChainMorphism(rule.left().chain().chain_ref(), host.chain().chain_ref(), f, std::move(maps));
}

std::vector<MatchCandidate> matches_for(const Rule& rule, const MultilevelTyping& host,
                                        const TypingChainMorphism& beta, Execution execution) {
  const auto& f = beta.levels();
  const auto& left = rule.left();
  auto filter = [&](const ElementId& e, const ElementId& x) {
    for (std::size_t i = 0; i <= rule.depth(); ++i) {
      bool in_l = left.chain().level(i).contains(e);
      if (in_l != host.chain().level(f(i)).contains(x)) return false;
      if (in_l && beta.map(i)(*left.type_at(i, e)) != *host.type_at(f(i), x)) return false;
    }
    return true;
  };
  std::vector<MatchCandidate> out;
  for (auto& mu : enumerate_homomorphisms(left.chain().host_ref(), host.chain().host_ref(), filter, execution)) {
    auto mu_chain = reduct_morphism(rule, host, mu, f);
    out.push_back({beta, std::move(mu), std::move(mu_chain)});
  }
  return out;
}

}  // namespace

std::vector<MatchCandidate> find_matches(const Rule& rule, const MultilevelTyping& host, const MatchOptions& options) {
  std::vector<TypingChainMorphism> betas;
  if (options.beta) {
    if (!same_chain(options.beta->src_ref(), rule.meta_ref()) || !same_chain(options.beta->dst_ref(), host.target_ref())) {
      throw Error(Errc::ChainMismatch, "supplied β does not map the rule's chain into the host's chain");
    }
    betas.push_back(*options.beta);
  } else {
    if (rule.depth() > host.target().depth()) return {};
    for (const auto& f : enumerate_level_maps(rule.depth(), host.target().depth())) {
      auto more = enumerate_chain_morphisms(rule.meta_ref(), host.target_ref(), f, rule.constants());
      betas.insert(betas.end(), more.begin(), more.end());
    }
  }

  std::vector<std::vector<MatchCandidate>> parts(betas.size());
  const bool across = options.execution == Execution::Parallel &&
                      betas.size() >= static_cast<std::size_t>(omp_get_max_threads()) && betas.size() > 1;
  if (across) {
    const auto count = static_cast<long>(betas.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) parts[k] = matches_for(rule, host, betas[k], Execution::Serial);
  } else {
    for (std::size_t k = 0; k < betas.size(); ++k) parts[k] = matches_for(rule, host, betas[k], options.execution);
  }

  std::vector<MatchCandidate> out;
  for (auto& part : parts) {
    for (auto& m : part) {
      if (options.limit && out.size() >= *options.limit) return out;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::string_view to_string(MatchCondition c) {
  switch (c) {
    case MatchCondition::Signature: return "signature";
    case MatchCondition::ChainMorphism: return "chain-morphism";
    case MatchCondition::Constant: return "constant";
    case MatchCondition::Reduct: return "reduct";
    case MatchCondition::TypeCompatibility: return "type-compatibility";
  }
  return "unknown";
}

MatchDiagnostics check_match(const Rule& rule, const MultilevelTyping& host, const GraphMorphism& mu,
                             const TypingChainMorphism& beta) {
  MatchDiagnostics d;
  auto issue = [&](MatchCondition c, std::size_t level, ElementId e, std::string detail) {
    d.issues.push_back({c, level, std::move(e), std::move(detail)});
  };
  const auto& left = rule.left();
  if (!(mu.dom() == left.subject())) issue(MatchCondition::Signature, 0, {}, "μ is not defined on L");
  if (!(mu.cod() == host.subject())) issue(MatchCondition::Signature, 0, {}, "μ does not land in the host");
  if (!same_chain(beta.src_ref(), rule.meta_ref())) issue(MatchCondition::Signature, 0, {}, "β does not start at MM");
  if (!same_chain(beta.dst_ref(), host.target_ref())) issue(MatchCondition::Signature, 0, {}, "β does not end at TG");
  if (!d.ok()) return d;

  for (const auto& v : compatibility_violations(beta)) {
    issue(MatchCondition::ChainMorphism, v.j, v.element, v.detail);
  }
  for (const auto& c : rule.constants()) {
    auto image = beta.map(c.level)(c.element);
    if (image.name != c.element.name) {
      issue(MatchCondition::Constant, c.level, c.element, "constant mapped to " + image.name);
    }
  }

  const auto& f = beta.levels();
  for (std::size_t i = 0; i <= rule.depth(); ++i) {
    const Graph& li = left.chain().level(i);
    const Graph& si = host.chain().level(f(i));
    Graph pre = preimage(mu, si);
    for (const auto& e : difference(li, pre)) {
      issue(MatchCondition::Reduct, i, e, "image " + mu(e).name + " is not at host level " + std::to_string(f(i)));
    }
    for (const auto& e : difference(pre, li)) {
      issue(MatchCondition::Reduct, i, e, "image " + mu(e).name + " is at host level " + std::to_string(f(i)));
    }
    for (const auto& e : li.elements()) {
      auto x = mu(e);
      if (!si.contains(x)) continue;
      auto expected = beta.map(i)(*left.type_at(i, e));
      auto actual = *host.type_at(f(i), x);
      if (expected != actual) {
        issue(MatchCondition::TypeCompatibility, i, e,
              "β maps the type to " + expected.name + " but " + x.name + " is typed " + actual.name);
      }
    }
  }
  return d;
}

MatchCandidate make_match(const Rule& rule, const MultilevelTyping& host, GraphMorphism mu, TypingChainMorphism beta) {
  auto d = check_match(rule, host, mu, beta);
  if (!d.ok()) {
    const auto& first = d.issues.front();
    throw Error(Errc::MatchInvalid, std::string(to_string(first.condition)) + " at level " +
                                        std::to_string(first.level) + ": " + first.detail);
  }
  auto mu_chain = reduct_morphism(rule, host, mu, beta.levels());
  return {std::move(beta), std::move(mu), std::move(mu_chain)};
}

}  // namespace mltg
