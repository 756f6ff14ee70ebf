#pragma once

#include <optional>
#include <string_view>

#include "mltg/chain.hpp"

namespace mltg::io {

struct GraphBlock {
  std::string name;
  std::optional<std::string> parent;
  Graph graph;
  Declarations decls;

  bool operator==(const GraphBlock&) const = default;
};

/// Tree of graphs: a block's level is its depth below the root block, and
/// its type annotations refer to graphs on its ancestor path.
struct HierarchyDocument {
  std::vector<GraphBlock> graphs;

  const GraphBlock* find(std::string_view name) const;
  /// Root-to-block path of names. Throws Errc::UnknownElement.
  std::vector<std::string> path(std::string_view name) const;
  /// Blocks without children below the root, in document order.
  std::vector<std::string> models() const;

  bool operator==(const HierarchyDocument&) const = default;
};

/// Throws Errc::ParseError with the line number.
HierarchyDocument parse_hierarchy(std::string_view text);

/// Canonical text: blocks in document order, items sorted.
std::string serialize_hierarchy(const HierarchyDocument& doc);

struct LoadedModel {
  std::string name;
  std::vector<std::string> path;  // root first, model last
  ChainRef target;                // graphs of the path above the model
  MultilevelTyping typing;        // the model typed over target
};

/// Loads a model and its type hierarchy. An empty name selects the only
/// model. Throws Errc::UnknownElement, Errc::DanglingTypeReference,
/// Errc::InvalidTyping, Errc::ChainAxiomViolation.
LoadedModel load_model(const HierarchyDocument& doc, std::string_view name = {});

/// Loads the top part of a hierarchy ending at `name` as a typing chain.
ChainRef load_chain(const HierarchyDocument& doc, std::string_view name);

struct ModelReport {
  std::string model;
  ValidationReport report;
};

/// Validates the full chain of every model, the model graph included.
std::vector<ModelReport> validate_document(const HierarchyDocument& doc);

/// Copy of doc whose block `name` holds typing's subject and declarations,
/// renamed to `new_name` if given.
HierarchyDocument replace_model(const HierarchyDocument& doc, std::string_view name, const MultilevelTyping& typing,
                                std::optional<std::string> new_name = std::nullopt);

}  // namespace mltg::io
