#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "scc/types.hpp"

namespace scc {

enum class EdgeKind { Publish, Pull, Command };

std::string_view to_string(EdgeKind kind);

/// Directed edge along which data may flow. Pull edges point from the
/// pulled component to the puller: a pull carries no argument, so only the
/// returned value moves.
struct FlowEdge {
  ComponentName from;
  ComponentName to;
  EdgeKind kind;

  friend bool operator==(const FlowEdge&, const FlowEdge&) = default;
  friend auto operator<=>(const FlowEdge&, const FlowEdge&) = default;
};

/// Static potential-information-flow graph of a specification.
struct FlowGraph {
  std::map<ComponentName, ComponentKind> nodes;
  std::set<FlowEdge> edges;

  friend bool operator==(const FlowGraph&, const FlowGraph&) = default;
};

/// Assumes `spec` validates.
FlowGraph build_flow_graph(const Specification& spec);

/// Source nodes from which `name` is reachable; a source is its own
/// ancestor. Throws Error(NOT_FOUND) if `name` is not a node.
std::set<ComponentName> source_ancestors(const FlowGraph& graph, const ComponentName& name);

enum class ExportFormat { Dot, Json };

/// Byte-deterministic rendering. Nodes are sorted by name, edges by
/// (from, to, kind).
std::string export_graph(const FlowGraph& graph, ExportFormat format);
std::string to_dot(const FlowGraph& graph);
std::string to_json(const FlowGraph& graph);

}  // namespace scc
