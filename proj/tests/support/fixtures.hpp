#pragma once

#include "mltg/rule.hpp"

// The plant hierarchy and the sample rules, built directly through the API.
namespace mltg::fixtures {

GraphRef ecore();
GraphRef generic_plant();
GraphRef hammer_plant();
GraphRef stool_plant();

/// [Ecore, generic_plant, hammer_plant] and [Ecore, generic_plant, stool_plant].
ChainRef hammer_tg();
ChainRef stool_tg();

/// {ghead @2:GenHead} over hammer_tg(); {gleg @2:GenLeg} over stool_tg().
MultilevelTyping hammer_config_0();
MultilevelTyping stool_config_0();

Rule create_part_plain();
Rule create_part();
Rule remove_part();
Rule drop_second_part();

TypeDeclaration type(const ElementId& e, std::size_t level, std::string t);

std::string model_path(const std::string& file);
std::string read_model(const std::string& file);

}  // namespace mltg::fixtures
