#include "mltg/apply.hpp"

#include <sstream>

#include "mltg/error.hpp"

namespace mltg {

namespace {

std::string join(const ElementSet& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id.name;
  }
  return out.empty() ? "nothing" : out;
}

TypingChainMorphism inclusions(const InclusionChain& sub, const InclusionChain& host) {
  std::vector<GraphMorphism> maps;
  for (std::size_t a = 0; a <= sub.depth(); ++a) {
    maps.push_back(GraphMorphism::inclusion(sub.level_ref(a), host.level_ref(a)));
  }
  return TypingChainMorphism(sub.chain_ref(), host.chain_ref(), LevelMap::identity(sub.depth()), std::move(maps));
}

TypingChainMorphism restricted(const GraphMorphism& base, const InclusionChain& src, const InclusionChain& dst,
                               const LevelMap& f) {
  std::vector<GraphMorphism> maps;
  for (std::size_t i = 0; i <= src.depth(); ++i) {
    maps.push_back(base.restrict(src.level_ref(i)).corestrict(dst.level_ref(f(i))));
  }
  return TypingChainMorphism(src.chain_ref(), dst.chain_ref(), f, std::move(maps));
}

}  // namespace

PushoutStep pushout_step(const Rule& rule, const MatchCandidate& match, const MultilevelTyping& host) {
  auto diagnostics = check_match(rule, host, match.mu, match.beta);
  if (!diagnostics.ok()) {
    throw Error(Errc::MatchInvalid, "match re-check failed: " + diagnostics.issues.front().detail);
  }
  const auto& f = match.levels();
  const auto& iface = rule.interface();
  const std::size_t m = host.depth();
  std::vector<std::string> trace;

  auto po = pushout_inclusion(rule.lambda(), match.mu);
  const GraphMorphism& delta0 = po.extension;
  const ElementSet added = difference(rule.union_graph(), rule.lhs());
  trace.push_back("pushout at level 0: added " + join(difference(*po.object, host.subject())));
  for (const auto& [from, to] : po.renamed) trace.push_back("renamed " + from + " to " + to);

  std::vector<Graph> levels(m + 1);
  std::vector<std::map<ElementId, std::string>> types(m + 1);
  levels[0] = *po.object;
  for (std::size_t a = 0; a <= m; ++a) {
    const Graph& sa = host.chain().level(a);
    for (const auto& x : sa.elements()) types[a][x] = host.type_at(a, x)->name;
    if (a > 0) levels[a] = sa;
  }
  for (std::size_t i = 0; i <= rule.depth(); ++i) {
    const std::size_t a = f(i);
    const Graph& ii = iface.chain().level(i);
    Graph image = delta0.restrict(iface.chain().level_ref(i)).image();
    if (a > 0) levels[a] = graph_union(levels[a], image);
    for (const auto& y : ii.elements()) {
      if (!added.count(y)) continue;
      types[a][delta0(y)] = match.beta.map(i)(*iface.type_at(i, y)).name;
    }
    if (a > 0) {
      trace.push_back("level " + std::to_string(a) + " = f(" + std::to_string(i) + "): host level joined with " +
                      join(difference(image, host.chain().level(a))));
    }
  }
  for (std::size_t a = 1; a <= m; ++a) {
    if (!f.covers(a)) trace.push_back("level " + std::to_string(a) + ": gap, host level kept");
  }

  auto d = MultilevelTyping::from_level_types(levels[0], host.target_ref(), types);
  auto sigma_incl = inclusions(host.chain(), d.chain());
  auto delta = restricted(delta0.corestrict(d.chain().host_ref()), iface.chain(), d.chain(), f);
  return {std::move(d), std::move(sigma_incl), std::move(delta), po.renamed, std::move(trace)};
}

FpbcStep fpbc_step(const PushoutStep& pushout, const Rule& rule) {
  const auto& d = pushout.d;
  const auto& f = pushout.delta.levels();
  auto pc = final_pullback_complement(rule.rho(), pushout.delta.map(0));
  std::vector<std::string> trace;
  trace.push_back("pullback complement at level 0: deleted " + join(pc.deleted) + ", dangling " + join(pc.dangling));

  const std::size_t m = d.depth();
  std::vector<std::map<ElementId, std::string>> types(m + 1);
  for (std::size_t a = 0; a <= m; ++a) {
    for (const auto& x : intersection(*pc.object, d.chain().level(a)).elements()) {
      types[a][x] = d.type_at(a, x)->name;
    }
  }
  auto t = MultilevelTyping::from_level_types(*pc.object, d.target_ref(), types);
  auto theta = inclusions(t.chain(), d.chain());
  auto nu = restricted(pc.comatch.corestrict(t.chain().host_ref()), rule.right().chain(), t.chain(), f);
  if (!is_reduct_morphism(rule.right().chain(), t.chain(), nu)) {
    throw Error(Errc::PullbackViolation, "comatch is not a reduct morphism");
  }
  trace.push_back("levels of T obtained by intersection with D");
  return {std::move(t), std::move(theta), std::move(nu), std::move(pc.deleted), std::move(pc.dangling),
          std::move(trace)};
}

ApplicationResult apply_rule(const Rule& rule, const MatchCandidate& match, const MultilevelTyping& host) {
  auto po = pushout_step(rule, match, host);
  auto pc = fpbc_step(po, rule);
  auto trace = std::move(po.trace);
  trace.insert(trace.end(), pc.trace.begin(), pc.trace.end());
  return {std::move(po.d),     std::move(pc.t),       std::move(po.sigma_incl), std::move(po.delta),
          std::move(pc.theta), std::move(pc.nu),      std::move(po.renamed),    std::move(pc.deleted),
          std::move(pc.dangling), std::move(trace)};
}

std::vector<std::string> check_application(const ApplicationResult& r, const Rule& rule, const MatchCandidate& match,
                                           const MultilevelTyping& host) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failures.emplace_back(what);
  };
  auto guarded = [&](const char* what, auto&& test) {
    try {
      expect(test(), what);
    } catch (const Error& e) {
      failures.push_back(std::string(what) + ": " + e.what());
    }
  };
  guarded("pushout square", [&] {
    return compose_chain_morphisms(rule.lambda_chain(), r.delta) ==
           compose_chain_morphisms(match.mu_chain, r.sigma_incl);
  });
  guarded("host typing preserved", [&] {
    return compose_chain_morphisms(r.sigma_incl, r.d.typing()) == host.typing();
  });
  guarded("added elements typed through β", [&] {
    return compose_chain_morphisms(r.delta, r.d.typing()) ==
           compose_chain_morphisms(rule.interface().typing(), match.beta);
  });
  guarded("typing of T borrowed from D", [&] {
    return compose_chain_morphisms(r.theta, r.d.typing()) == r.t.typing();
  });
  guarded("pullback complement square", [&] {
    return compose_chain_morphisms(rule.rho_chain(), r.delta) == compose_chain_morphisms(r.nu, r.theta);
  });
  guarded("ς is a reduct morphism", [&] { return is_reduct_morphism(host.chain(), r.d.chain(), r.sigma_incl); });
  guarded("δ is a reduct morphism", [&] { return is_reduct_morphism(rule.interface().chain(), r.d.chain(), r.delta); });
  guarded("θ is a reduct morphism", [&] { return is_reduct_morphism(r.t.chain(), r.d.chain(), r.theta); });
  guarded("ν is a reduct morphism", [&] { return is_reduct_morphism(rule.right().chain(), r.t.chain(), r.nu); });
  guarded("D is a typing chain", [&] { return validate_chain(r.d.chain().chain()).ok(); });
  guarded("T is a typing chain", [&] { return validate_chain(r.t.chain().chain()).ok(); });
  return failures;
}

}  // namespace mltg
