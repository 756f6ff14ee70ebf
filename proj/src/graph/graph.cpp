#include "mltg/graph.hpp"

#include <ostream>

#include "mltg/error.hpp"

namespace mltg {

std::ostream& operator<<(std::ostream& os, const ElementId& id) {
  return os << (id.kind == ElementKind::Node ? "node " : "arrow ") << id.name;
}

void Graph::add_node(std::string name) {
  if (name.empty()) throw Error(Errc::InvalidGraph, "empty node name");
  if (!nodes_.insert(std::move(name)).second) {
    throw Error(Errc::InvalidGraph, "duplicate node name");
  }
}

void Graph::add_arrow(std::string name, std::string source, std::string target) {
  if (name.empty()) throw Error(Errc::InvalidGraph, "empty arrow name");
  if (!has_node(source) || !has_node(target)) {
    throw Error(Errc::InvalidGraph, "arrow " + name + " has an endpoint outside the graph");
  }
  if (has_arrow(name)) throw Error(Errc::InvalidGraph, "duplicate arrow name " + name);
  arrows_.emplace(std::move(name), ArrowEnds{std::move(source), std::move(target)});
}

bool Graph::contains(const ElementId& id) const {
  return id.kind == ElementKind::Node ? has_node(id.name) : has_arrow(id.name);
}

const ArrowEnds& Graph::ends(std::string_view arrow) const {
  auto it = arrows_.find(arrow);
  if (it == arrows_.end()) {
    throw Error(Errc::UnknownElement, "unknown arrow " + std::string(arrow));
  }
  return it->second;
}

std::vector<ElementId> Graph::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (const auto& n : nodes_) out.push_back(ElementId::node(n));
  for (const auto& [a, _] : arrows_) out.push_back(ElementId::arrow(a));
  return out;
}

Graph make_graph(std::initializer_list<std::string> nodes,
                 std::initializer_list<std::tuple<std::string, std::string, std::string>> arrows) {
  Graph g;
  for (const auto& n : nodes) g.add_node(n);
  for (const auto& [a, s, t] : arrows) g.add_arrow(a, s, t);
  return g;
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "{";
  bool first = true;
  for (const auto& n : g.nodes()) {
    os << (first ? "" : ", ") << n;
    first = false;
  }
  for (const auto& [a, e] : g.arrows()) {
    os << (first ? "" : ", ") << a << ":" << e.source << "->" << e.target;
    first = false;
  }
  return os << "}";
}

bool is_subgraph(const Graph& g, const Graph& h) {
  for (const auto& n : g.nodes()) {
    if (!h.has_node(n)) return false;
  }
  for (const auto& [a, e] : g.arrows()) {
    auto it = h.arrows().find(a);
    if (it == h.arrows().end() || it->second != e) return false;
  }
  return true;
}

Graph intersection(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& n : a.nodes()) {
    if (b.has_node(n)) out.add_node(n);
  }
  for (const auto& [name, e] : a.arrows()) {
    auto it = b.arrows().find(name);
    if (it == b.arrows().end()) continue;
    if (it->second != e) {
      throw Error(Errc::InvalidGraph, "arrow " + name + " has different endpoints in the two graphs");
    }
    out.add_arrow(name, e.source, e.target);
  }
  return out;
}

Graph graph_union(const Graph& a, const Graph& b) {
  Graph out = a;
  for (const auto& n : b.nodes()) {
    if (!out.has_node(n)) out.add_node(n);
  }
  for (const auto& [name, e] : b.arrows()) {
    auto it = out.arrows().find(name);
    if (it != out.arrows().end()) {
      if (it->second != e) {
        throw Error(Errc::InvalidGraph, "arrow " + name + " has different endpoints in the two graphs");
      }
      continue;
    }
    out.add_arrow(name, e.source, e.target);
  }
  return out;
}

Graph subgraph_of(const Graph& host, const ElementSet& members) {
  Graph out;
  for (const auto& id : members) {
    if (!host.contains(id)) {
      std::string what = id.name;
      throw Error(Errc::NotASubgraph, "element " + what + " is not in the host graph");
    }
    if (id.kind == ElementKind::Node) out.add_node(id.name);
  }
  for (const auto& id : members) {
    if (id.kind != ElementKind::Arrow) continue;
    const auto& e = host.ends(id.name);
    if (!out.has_node(e.source) || !out.has_node(e.target)) {
      throw Error(Errc::NotASubgraph, "arrow " + id.name + " selected without its endpoints");
    }
    out.add_arrow(id.name, e.source, e.target);
  }
  return out;
}

ElementSet difference(const Graph& a, const Graph& b) {
  ElementSet out;
  for (const auto& id : a.elements()) {
    if (!b.contains(id)) out.insert(id);
  }
  return out;
}

NameSet all_names(const Graph& g) {
  NameSet out = g.nodes();
  for (const auto& [a, _] : g.arrows()) out.insert(a);
  return out;
}

}  // namespace mltg
