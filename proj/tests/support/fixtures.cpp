#include "fixtures.hpp"

#include <fstream>
#include <sstream>

namespace mltg::fixtures {

namespace {

using N = ElementId;

ElementId node(const char* n) { return N::node(n); }
ElementId arrow(const char* n) { return N::arrow(n); }

ChainRef plant_tg(GraphRef plant, Declarations plant_decls) {
  Declarations generic{{type(node("Machine"), 0, "EClass"), type(node("Part"), 0, "EClass"),
                        type(arrow("creates"), 0, "EReference")},
                       {}};
  return share(TypingChain::from_direct_types({ecore(), generic_plant(), std::move(plant)},
                                              {{}, generic, std::move(plant_decls)}));
}

ChainRef one_level_meta() {
  auto mm1 = share(make_graph({"M1", "P1"}, {{"cr", "M1", "P1"}}));
  Declarations d{{type(node("M1"), 0, "EClass"), type(node("P1"), 0, "EClass"), type(arrow("cr"), 0, "EReference")},
                 {}};
  return share(TypingChain::from_direct_types({ecore(), mm1}, {{}, d}));
}

}  // namespace

TypeDeclaration type(const ElementId& e, std::size_t level, std::string t) { return {e, level, std::move(t)}; }

GraphRef ecore() { return share(make_graph({"EClass"}, {{"EReference", "EClass", "EClass"}})); }

GraphRef generic_plant() { return share(make_graph({"Machine", "Part"}, {{"creates", "Machine", "Part"}})); }

GraphRef hammer_plant() {
  return share(make_graph({"GenHead", "Head", "Hammer"}, {{"createsHead", "GenHead", "Head"}, {"has", "Hammer", "Head"}}));
}

GraphRef stool_plant() {
  return share(make_graph({"GenLeg", "Leg", "Stool"}, {{"createsLeg", "GenLeg", "Leg"}, {"has", "Stool", "Leg"}}));
}

ChainRef hammer_tg() {
  return plant_tg(hammer_plant(),
                  {{type(node("GenHead"), 1, "Machine"), type(node("Head"), 1, "Part"), type(node("Hammer"), 1, "Part"),
                    type(arrow("createsHead"), 1, "creates"), type(arrow("has"), 0, "EReference")},
                   {}});
}

ChainRef stool_tg() {
  return plant_tg(stool_plant(),
                  {{type(node("GenLeg"), 1, "Machine"), type(node("Leg"), 1, "Part"), type(node("Stool"), 1, "Part"),
                    type(arrow("createsLeg"), 1, "creates"), type(arrow("has"), 0, "EReference")},
                   {}});
}

MultilevelTyping hammer_config_0() {
  return MultilevelTyping::from_direct_types(make_graph({"ghead"}), hammer_tg(),
                                             {{type(node("ghead"), 2, "GenHead")}, {}});
}

MultilevelTyping stool_config_0() {
  return MultilevelTyping::from_direct_types(make_graph({"gleg"}), stool_tg(), {{type(node("gleg"), 2, "GenLeg")}, {}});
}

Rule create_part_plain() {
  auto mm = one_level_meta();
  auto left = MultilevelTyping::from_direct_types(make_graph({"m1"}), mm, {{type(node("m1"), 1, "M1")}, {}});
  auto right = MultilevelTyping::from_direct_types(
      make_graph({"m1", "p1"}, {{"c", "m1", "p1"}}), mm,
      {{type(node("m1"), 1, "M1"), type(node("p1"), 1, "P1"), type(arrow("c"), 1, "cr")}, {}});
  return build_rule("CreatePartPlain", std::move(left), std::move(right));
}

Rule create_part() {
  auto mm2 = share(make_graph({"M1", "P1"}, {{"cr", "M1", "P1"}}));
  Declarations d1{{type(node("Machine"), 0, "EClass"), type(node("Part"), 0, "EClass"),
                   type(arrow("creates"), 0, "EReference")},
                  {}};
  Declarations d2{{type(node("M1"), 1, "Machine"), type(node("P1"), 1, "Part"), type(arrow("cr"), 1, "creates")}, {}};
  auto mm = share(TypingChain::from_direct_types({ecore(), generic_plant(), mm2}, {{}, d1, d2}));
  auto left = MultilevelTyping::from_direct_types(make_graph({"m1"}), mm, {{type(node("m1"), 2, "M1")}, {}});
  auto right = MultilevelTyping::from_direct_types(
      make_graph({"m1", "p1"}, {{"c", "m1", "p1"}}), mm,
      {{type(node("m1"), 2, "M1"), type(node("p1"), 2, "P1"), type(arrow("c"), 2, "cr")}, {}});
  return build_rule("CreatePart", std::move(left), std::move(right),
                    {{1, node("Machine")}, {1, node("Part")}, {1, arrow("creates")}});
}

Rule remove_part() {
  auto mm = one_level_meta();
  auto left = MultilevelTyping::from_direct_types(
      make_graph({"m1", "p1"}, {{"c", "m1", "p1"}}), mm,
      {{type(node("m1"), 1, "M1"), type(node("p1"), 1, "P1"), type(arrow("c"), 1, "cr")}, {}});
  auto right = MultilevelTyping::from_direct_types(make_graph({"m1"}), mm, {{type(node("m1"), 1, "M1")}, {}});
  return build_rule("RemovePart", std::move(left), std::move(right));
}

Rule drop_second_part() {
  auto mm = one_level_meta();
  auto left = MultilevelTyping::from_direct_types(
      make_graph({"m1", "p1", "p2"}, {{"c1", "m1", "p1"}, {"c2", "m1", "p2"}}), mm,
      {{type(node("m1"), 1, "M1"), type(node("p1"), 1, "P1"), type(node("p2"), 1, "P1"), type(arrow("c1"), 1, "cr"),
        type(arrow("c2"), 1, "cr")},
       {}});
  auto right = MultilevelTyping::from_direct_types(
      make_graph({"m1", "p1"}, {{"c1", "m1", "p1"}}), mm,
      {{type(node("m1"), 1, "M1"), type(node("p1"), 1, "P1"), type(arrow("c1"), 1, "cr")}, {}});
  return build_rule("DropSecondPart", std::move(left), std::move(right));
}

std::string model_path(const std::string& file) { return std::string(MLTG_MODELS_DIR) + "/" + file; }

std::string read_model(const std::string& file) {
  std::ifstream in(model_path(file), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mltg::fixtures
