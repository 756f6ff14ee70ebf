#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mltg/error.hpp"
#include "mltg/io/export.hpp"
#include "mltg/io/rule_format.hpp"

namespace mltg {
namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidGraph;
}

TEST(Hierarchy, PlantModelMatchesFixture) {
  auto doc = io::parse_hierarchy(fixtures::read_model("plant.mlh"));
  EXPECT_EQ(doc.models(), std::vector<std::string>{"hammer_config_0"});
  auto model = io::load_model(doc);
  EXPECT_EQ(model.name, "hammer_config_0");
  EXPECT_EQ(model.path, (std::vector<std::string>{"Ecore", "generic_plant", "hammer_plant", "hammer_config_0"}));
  EXPECT_EQ(*model.target, *fixtures::hammer_tg());
  EXPECT_EQ(model.typing, fixtures::hammer_config_0());
  for (const auto& r : io::validate_document(doc)) EXPECT_TRUE(r.report.ok()) << r.model;
}

TEST(Hierarchy, StoolSibling) {
  auto doc = io::parse_hierarchy(fixtures::read_model("plant_with_stool.mlh"));
  EXPECT_EQ(doc.models(), (std::vector<std::string>{"hammer_config_0", "stool_config_0"}));
  EXPECT_EQ(io::load_model(doc, "stool_config_0").typing, fixtures::stool_config_0());
  EXPECT_EQ(code_of([&] { io::load_model(doc); }), Errc::UnknownElement);
  EXPECT_EQ(*io::load_chain(doc, "stool_plant"), *fixtures::stool_tg());
}

TEST(Hierarchy, RoundTrip) {
  for (const char* file : {"plant.mlh", "plant_with_stool.mlh"}) {
    auto doc = io::parse_hierarchy(fixtures::read_model(file));
    auto text = io::serialize_hierarchy(doc);
    EXPECT_EQ(io::parse_hierarchy(text), doc) << file;
    EXPECT_EQ(io::serialize_hierarchy(io::parse_hierarchy(text)), text) << file;
  }
}

TEST(Hierarchy, ReplaceModel) {
  auto doc = io::parse_hierarchy(fixtures::read_model("plant.mlh"));
  auto rule = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto result = apply_rule(rule, find_matches(rule, host).front(), host);
  auto out = io::replace_model(doc, "hammer_config_0", result.t, "hammer_config_1");
  auto reloaded = io::load_model(out, "hammer_config_1");
  EXPECT_EQ(reloaded.typing, result.t);
  auto text = io::serialize_hierarchy(out);
  EXPECT_NE(text.find("type p1 @ 1:Part"), std::string::npos);
  EXPECT_NE(text.find("arrow c: ghead -> p1"), std::string::npos);
}

TEST(Hierarchy, ParseErrorsCarryLineNumbers) {
  try {
    io::parse_hierarchy("graph A\n  node x\n  bogus y\nend\n");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { io::parse_hierarchy("graph A\n  node x\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_hierarchy("graph A\nend\ngraph A\nend\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_hierarchy("graph A : Missing\nend\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_hierarchy("graph A\n  arrow e: x -> y\nend\n"); }), Errc::ParseError);
}

TEST(Hierarchy, UnknownTypeIsReported) {
  auto doc = io::parse_hierarchy("graph A\n  node T\nend\ngraph B : A\n  node x\n  type x @ 0:Nope\nend\n");
  EXPECT_EQ(code_of([&] { io::load_model(doc); }), Errc::DanglingTypeReference);
}

TEST(Hierarchy, SingleGraphIsDepthZeroChain) {
  auto doc = io::parse_hierarchy("graph A\n  node x\nend\n");
  auto chain = io::load_chain(doc, "A");
  EXPECT_EQ(chain->depth(), 0u);
  EXPECT_TRUE(validate_chain(*chain).ok());
}

TEST(RuleFormat, ModelsMatchFixtures) {
  EXPECT_EQ(io::parse_rule(fixtures::read_model("create_part_plain.mlr")), fixtures::create_part_plain());
  EXPECT_EQ(io::parse_rule(fixtures::read_model("create_part.mlr")), fixtures::create_part());
  EXPECT_EQ(io::parse_rule(fixtures::read_model("remove_part.mlr")), fixtures::remove_part());
  EXPECT_EQ(io::parse_rule(fixtures::read_model("drop_second_part.mlr")), fixtures::drop_second_part());
}

TEST(RuleFormat, RoundTrip) {
  for (const char* file : {"create_part_plain.mlr", "create_part.mlr", "remove_part.mlr", "drop_second_part.mlr"}) {
    auto doc = io::parse_rule_document(fixtures::read_model(file));
    auto text = io::serialize_rule(doc);
    EXPECT_EQ(io::parse_rule_document(text), doc) << file;
  }
}

TEST(RuleFormat, Errors) {
  EXPECT_EQ(code_of([] { io::parse_rule_document("graph A\nend\n"); }), Errc::ParseError);
  auto text = fixtures::read_model("create_part_plain.mlr");
  auto pos = text.find("to\n");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_EQ(code_of([&] { io::parse_rule_document(text.substr(0, pos)); }), Errc::ParseError);
}

TEST(Beta, ParsesLevelMapAndMaps) {
  auto rule = fixtures::create_part_plain();
  auto tg = fixtures::hammer_tg();
  auto beta = io::parse_beta(
      "levels 0 2\n"
      "map 0 EClass -> EClass\nmap 0 EReference -> EReference\n"
      "map 1 M1 -> GenHead\nmap 1 P1 -> Head\nmap 1 cr -> createsHead\n",
      rule.meta_ref(), tg);
  EXPECT_EQ(beta.levels(), LevelMap(2, {0, 2}));
  EXPECT_EQ(beta.map(1).node("M1"), "GenHead");
  EXPECT_EQ(code_of([&] { io::parse_beta("levels 0 2\n", rule.meta_ref(), tg); }), Errc::InvalidGraph);
  EXPECT_EQ(code_of([&] { io::parse_beta("map 1 M1 -> GenHead\n", rule.meta_ref(), tg); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_beta("levels 1 2\n", rule.meta_ref(), tg); }), Errc::InvalidLevelMap);
}

TEST(Export, JsonAndDot) {
  auto doc = io::parse_hierarchy(fixtures::read_model("plant.mlh"));
  auto json = io::to_json(doc);
  EXPECT_TRUE(json.is_object() || json.is_array());
  auto rule = fixtures::create_part_plain();
  auto host = fixtures::hammer_config_0();
  auto match = find_matches(rule, host).front();
  auto mj = io::to_json(match);
  EXPECT_EQ(mj["levels"], io::Json::array({0, 1}));
  auto dot = io::export_dot(doc);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("cluster_hammer_plant"), std::string::npos);
  EXPECT_NE(dot.find("GenHead"), std::string::npos);
  auto err = io::to_json(Error(Errc::IdentificationConflict, "x"));
  EXPECT_EQ(err["error"], "IdentificationConflict");
}

}  // namespace
}  // namespace mltg
