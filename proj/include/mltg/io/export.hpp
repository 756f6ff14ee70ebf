#pragma once

#include <json.hpp>

#include "mltg/apply.hpp"
#include "mltg/error.hpp"
#include "mltg/io/hierarchy.hpp"

namespace mltg::io {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const GraphMorphism& m);
Json to_json(const LevelMap& f);
Json to_json(const HierarchyDocument& doc);
Json to_json(const std::vector<ModelReport>& reports);
Json to_json(const MatchCandidate& match);
Json to_json(const MatchDiagnostics& diagnostics);
Json to_json(const ApplicationResult& result);
Json to_json(const Error& error);

/// DOT text with one cluster per listed graph (all graphs if empty). Node
/// direct types are dashed edges to the type node; arrow direct types are
/// appended to the arrow label.
std::string export_dot(const HierarchyDocument& doc, const std::vector<std::string>& graphs = {});

}  // namespace mltg::io
