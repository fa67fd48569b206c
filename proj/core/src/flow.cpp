#include "scc/flow.hpp"

#include <deque>
#include <map>
#include <vector>

#include "json.hpp"
#include "scc/error.hpp"

namespace scc {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Publish: return "publish";
    case EdgeKind::Pull: return "pull";
    case EdgeKind::Command: return "command";
  }
  return "?";
}

FlowGraph build_flow_graph(const Specification& spec) {
  FlowGraph g;
  for (const auto& decl : spec.declarations) {
    g.nodes.emplace(decl.name(), decl.kind());
    if (const auto* ctx = decl.as<ContextDecl>()) {
      if (const ComponentName* trigger = ctx->contract.trigger()) {
        g.edges.insert({*trigger, ctx->name, EdgeKind::Publish});
      }
      if (ctx->contract.get_target) {
        g.edges.insert({*ctx->contract.get_target, ctx->name, EdgeKind::Pull});
      }
    } else if (const auto* ctr = decl.as<ControllerDecl>()) {
      g.edges.insert({ctr->trigger, ctr->name, EdgeKind::Publish});
      g.edges.insert({ctr->name, ctr->action, EdgeKind::Command});
    }
  }
  return g;
}

std::set<ComponentName> source_ancestors(const FlowGraph& graph, const ComponentName& name) {
  if (!graph.nodes.contains(name)) {
    throw Error(ErrorCode::NotFound, "'" + name.str() + "' is not in the flow graph");
  }
  std::map<ComponentName, std::vector<const ComponentName*>> preds;
  for (const auto& e : graph.edges) preds[e.to].push_back(&e.from);

  std::set<ComponentName> seen{name};
  std::deque<ComponentName> work{name};
  while (!work.empty()) {
    ComponentName cur = std::move(work.front());
    work.pop_front();
    auto it = preds.find(cur);
    if (it == preds.end()) continue;
    for (const ComponentName* p : it->second) {
      if (seen.insert(*p).second) work.push_back(*p);
    }
  }

  std::set<ComponentName> out;
  for (const auto& n : seen) {
    auto kind = graph.nodes.find(n);
    if (kind != graph.nodes.end() && kind->second == ComponentKind::Source) out.insert(n);
  }
  return out;
}

namespace {

std::string_view dot_shape(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Source:
    case ComponentKind::Action: return "box";
    case ComponentKind::Context: return "ellipse";
    case ComponentKind::Controller: return "diamond";
  }
  return "box";
}

}  // namespace

std::string to_dot(const FlowGraph& graph) {
  // Component names are identifiers, so no quoting of the contents is needed.
  std::string out = "digraph flow {\n";
  for (const auto& [name, kind] : graph.nodes) {
    out += "\"" + name.str() + "\" [shape=" + std::string(dot_shape(kind)) + "];\n";
  }
  for (const auto& e : graph.edges) {
    out += "\"" + e.from.str() + "\" -> \"" + e.to.str() + "\" [label=\"" +
           std::string(to_string(e.kind)) + "\"";
    if (e.kind == EdgeKind::Pull) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const FlowGraph& graph) {
  using nlohmann::ordered_json;
  ordered_json nodes = ordered_json::array();
  for (const auto& [name, kind] : graph.nodes) {
    nodes.push_back({{"name", name.str()}, {"kind", to_string(kind)}});
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"from", e.from.str()}, {"to", e.to.str()}, {"kind", to_string(e.kind)}});
  }
  ordered_json doc;
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string export_graph(const FlowGraph& graph, ExportFormat format) {
  return format == ExportFormat::Dot ? to_dot(graph) : to_json(graph);
}

}  // namespace scc
