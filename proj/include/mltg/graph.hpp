#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace mltg {

enum class ElementKind { Node, Arrow };

/// Name of a node or arrow. Names are unique per kind within a graph.
struct ElementId {
  ElementKind kind = ElementKind::Node;
  std::string name;

  static ElementId node(std::string name) { return {ElementKind::Node, std::move(name)}; }
  static ElementId arrow(std::string name) { return {ElementKind::Arrow, std::move(name)}; }

  auto operator<=>(const ElementId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ElementId& id);

struct ArrowEnds {
  std::string source;
  std::string target;

  auto operator<=>(const ArrowEnds&) const = default;
};

using NameSet = std::set<std::string, std::less<>>;
using ArrowTable = std::map<std::string, ArrowEnds, std::less<>>;
using ElementSet = std::set<ElementId>;

/// Finite directed multigraph. Arrows are named and carry their endpoints,
/// so two graphs with equal tables are equal.
class Graph {
 public:
  Graph() = default;

  /// Throws Errc::InvalidGraph on an empty or duplicate name.
  void add_node(std::string name);
  /// Throws Errc::InvalidGraph on a duplicate name or a missing endpoint.
  void add_arrow(std::string name, std::string source, std::string target);

  bool has_node(std::string_view name) const { return nodes_.find(name) != nodes_.end(); }
  bool has_arrow(std::string_view name) const { return arrows_.find(name) != arrows_.end(); }
  bool contains(const ElementId& id) const;

  /// Throws Errc::UnknownElement.
  const ArrowEnds& ends(std::string_view arrow) const;

  const NameSet& nodes() const { return nodes_; }
  const ArrowTable& arrows() const { return arrows_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t size() const { return nodes_.size() + arrows_.size(); }
  bool empty() const { return nodes_.empty() && arrows_.empty(); }

  /// Nodes first, then arrows, each in name order.
  std::vector<ElementId> elements() const;

  bool operator==(const Graph&) const = default;

 private:
  NameSet nodes_;
  ArrowTable arrows_;
};

using GraphRef = std::shared_ptr<const Graph>;

inline GraphRef share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// Test and fixture helper: `make_graph({"a", "b"}, {{"e", "a", "b"}})`.
Graph make_graph(std::initializer_list<std::string> nodes,
                 std::initializer_list<std::tuple<std::string, std::string, std::string>> arrows = {});

std::ostream& operator<<(std::ostream& os, const Graph& g);

/// g ⊑ h: every node and arrow of g is in h with the same endpoints.
bool is_subgraph(const Graph& g, const Graph& h);

/// Intersection of two graphs whose shared arrows agree on endpoints
/// (e.g. two subgraphs of one host). Throws Errc::InvalidGraph otherwise.
Graph intersection(const Graph& a, const Graph& b);

/// Union identifying equal names. Throws Errc::InvalidGraph when a shared
/// arrow name has different endpoints.
Graph graph_union(const Graph& a, const Graph& b);

/// The subgraph of `host` spanned by `members`. Throws Errc::NotASubgraph
/// if an arrow's endpoint is missing or a member is not in host.
Graph subgraph_of(const Graph& host, const ElementSet& members);

/// Elements of `a` that are not in `b` (not a graph in general).
ElementSet difference(const Graph& a, const Graph& b);

/// All names used by nodes or arrows.
NameSet all_names(const Graph& g);

}  // namespace mltg
