#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "mltg/apply.hpp"
#include "mltg/error.hpp"
#include "oracles.hpp"

namespace mltg {
namespace {

using fixtures::type;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidGraph;
}

TEST(Apply, CreatePartOnHammerConfig) {
  auto rule = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto match = find_matches(rule, host).front();
  auto result = apply_rule(rule, match, host);
  EXPECT_EQ(result.d.subject(), make_graph({"ghead", "p1"}, {{"c", "ghead", "p1"}}));
  EXPECT_EQ(result.t, result.d);
  EXPECT_TRUE(result.deleted.empty());
  EXPECT_TRUE(result.renamed.empty());
  EXPECT_EQ(result.t.direct_type(ElementId::node("p1")), (DirectType{1, ElementId::node("Part")}));
  EXPECT_EQ(result.t.direct_type(ElementId::arrow("c")), (DirectType{1, ElementId::arrow("creates")}));
  EXPECT_EQ(result.t.direct_type(ElementId::node("ghead")), (DirectType{2, ElementId::node("GenHead")}));
  EXPECT_TRUE(check_application(result, rule, match, host).empty());
  EXPECT_EQ(oracle::check_levelwise_pushouts(rule, match, host, result), "");
  EXPECT_FALSE(result.trace.empty());
}

TEST(Apply, DeeperLevelMapTypesByLowerGraph) {
  auto rule = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto match = find_matches(rule, host).at(1);
  auto result = apply_rule(rule, match, host);
  EXPECT_EQ(result.t.direct_type(ElementId::node("p1")), (DirectType{2, ElementId::node("Head")}));
  EXPECT_EQ(result.t.direct_type(ElementId::arrow("c")), (DirectType{2, ElementId::arrow("createsHead")}));
  EXPECT_FALSE(result.t.type_at(1, ElementId::node("p1")).has_value());
  EXPECT_EQ(result.t.type_at(0, ElementId::node("p1")), ElementId::node("EClass"));
  EXPECT_TRUE(check_application(result, rule, match, host).empty());
}

TEST(Apply, FullRuleOnStoolConfig) {
  auto rule = fixtures::create_part();
  auto host = fixtures::stool_config_0();
  auto match = find_matches(rule, host).front();
  auto result = apply_rule(rule, match, host);
  EXPECT_EQ(result.t.direct_type(ElementId::node("p1")), (DirectType{2, ElementId::node("Leg")}));
  EXPECT_TRUE(check_application(result, rule, match, host).empty());
}

TEST(Apply, FreshensNamesUsedByHost) {
  auto rule = fixtures::create_part_plain();
  auto host = MultilevelTyping::from_direct_types(
      make_graph({"ghead", "p1"}), fixtures::hammer_tg(),
      {{type(ElementId::node("ghead"), 2, "GenHead"), type(ElementId::node("p1"), 2, "Hammer")}, {}});
  auto matches = find_matches(rule, host);
  auto it = std::find_if(matches.begin(), matches.end(), [](const MatchCandidate& m) {
    return m.mu.node("m1") == "ghead";
  });
  ASSERT_NE(it, matches.end());
  auto result = apply_rule(rule, *it, host);
  EXPECT_EQ(result.renamed, (NameMap{{"p1", "p1#2"}}));
  EXPECT_TRUE(result.d.subject().has_node("p1#2"));
  EXPECT_EQ(result.d.subject().ends("c"), (ArrowEnds{"ghead", "p1#2"}));
}

TEST(Apply, RemoveRestoresHost) {
  auto create = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto created = apply_rule(create, find_matches(create, host).front(), host).t;
  auto remove = fixtures::remove_part();
  auto matches = find_matches(remove, created);
  ASSERT_EQ(matches.size(), 1u);
  auto result = apply_rule(remove, matches.front(), created);
  EXPECT_EQ(result.t, host);
  EXPECT_EQ(result.deleted, (ElementSet{ElementId::node("p1"), ElementId::arrow("c")}));
  EXPECT_TRUE(check_application(result, remove, matches.front(), created).empty());
}

TEST(Apply, DeletingNodeRemovesDanglingArrows) {
  auto plain = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto created = apply_rule(plain, find_matches(plain, host).front(), host).t;
  auto left = MultilevelTyping::from_direct_types(make_graph({"p1"}), plain.meta_ref(),
                                                  {{type(ElementId::node("p1"), 1, "P1")}, {}});
  auto right = MultilevelTyping::from_direct_types(Graph{}, plain.meta_ref(), {});
  auto rule = build_rule("DropPart", left, right);
  auto match = find_matches(rule, created).front();
  auto result = apply_rule(rule, match, created);
  EXPECT_EQ(result.t.subject(), make_graph({"ghead"}));
  EXPECT_EQ(result.dangling, (ElementSet{ElementId::arrow("c")}));
  EXPECT_TRUE(check_application(result, rule, match, created).empty());
}

TEST(Apply, IdentificationConflict) {
  auto plain = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto created = apply_rule(plain, find_matches(plain, host).front(), host).t;
  auto rule = fixtures::drop_second_part();
  auto matches = find_matches(rule, created);
  ASSERT_FALSE(matches.empty());
  EXPECT_EQ(matches.front().mu.node("p2"), "p1");
  auto step = pushout_step(rule, matches.front(), created);
  EXPECT_EQ(code_of([&] { fpbc_step(step, rule); }), Errc::IdentificationConflict);
  EXPECT_EQ(code_of([&] { apply_rule(rule, matches.front(), created); }), Errc::IdentificationConflict);
}

TEST(Apply, RejectsInvalidMatch) {
  auto rule = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto match = find_matches(rule, host).front();
  EXPECT_EQ(code_of([&] { pushout_step(rule, match, fixtures::stool_config_0()); }), Errc::MatchInvalid);
}

TEST(Apply, RandomApplicationsSatisfyInvariants) {
  gen::Rng rng(41);
  int applied = 0;
  int conflicts = 0;
  for (int round = 0; round < 80; ++round) {
    auto app = gen::random_application(rng);
    auto step = pushout_step(app.rule, app.match, app.host);
    bool conflict = oracle::has_identification_conflict(app.rule.rho(), step.delta.map(0));
    if (conflict) {
      EXPECT_EQ(code_of([&] { apply_rule(app.rule, app.match, app.host); }), Errc::IdentificationConflict);
      ++conflicts;
      continue;
    }
    auto result = apply_rule(app.rule, app.match, app.host);
    auto failures = check_application(result, app.rule, app.match, app.host);
    EXPECT_TRUE(failures.empty()) << "round " << round << ": " << failures.front();
    EXPECT_EQ(oracle::check_levelwise_pushouts(app.rule, app.match, app.host, result), "") << "round " << round;
    PullbackComplement pc{share(result.t.subject()), result.theta.map(0), result.nu.map(0), result.deleted,
                          result.dangling};
    EXPECT_EQ(oracle::check_final_pullback_complement(app.rule.rho(), result.delta.map(0), pc), "")
        << "round " << round;
    ++applied;
  }
  EXPECT_GT(applied, 40);
  (void)conflicts;
}

}  // namespace
}  // namespace mltg
