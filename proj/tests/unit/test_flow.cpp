#include <fstream>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "json.hpp"
#include "scc/error.hpp"
#include "scc/flow.hpp"
#include "scc/validate.hpp"
#include "scc/webcam.hpp"

using namespace scc;

namespace {

ComponentName N(const char* s) { return ComponentName(s); }

std::set<ComponentName> names(std::initializer_list<const char*> list) {
  std::set<ComponentName> out;
  for (const char* s : list) out.insert(N(s));
  return out;
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("webcam flow graph") {
  const FlowGraph g = build_flow_graph(webcam::specification());
  CHECK(g.nodes.size() == 7);
  CHECK(g.nodes.at(N("Camera")) == ComponentKind::Source);
  CHECK(g.nodes.at(N("Screen")) == ComponentKind::Action);
  CHECK(g.nodes.at(N("Display")) == ComponentKind::Controller);

  const std::set<FlowEdge> expected = {
      {N("Camera"), N("ProcessPicture"), EdgeKind::Publish},
      {N("ProcessPicture"), N("ComposeDisplay"), EdgeKind::Publish},
      {N("MakeAd"), N("ComposeDisplay"), EdgeKind::Pull},
      {N("IP"), N("MakeAd"), EdgeKind::Pull},
      {N("ComposeDisplay"), N("Display"), EdgeKind::Publish},
      {N("Display"), N("Screen"), EdgeKind::Command},
  };
  CHECK(g.edges == expected);
}

TEST_CASE("trivial graphs") {
  CHECK(build_flow_graph(Specification{}) == FlowGraph{});
  const FlowGraph single = build_flow_graph(Specification{{SourceDecl{N("S"), DataType::Int}}});
  CHECK(single.nodes.size() == 1);
  CHECK(single.edges.empty());
}

TEST_CASE("source ancestors in the webcam graph") {
  const FlowGraph g = build_flow_graph(webcam::specification());
  CHECK(source_ancestors(g, N("Screen")) == names({"Camera", "IP"}));
  CHECK(source_ancestors(g, N("ComposeDisplay")) == names({"Camera", "IP"}));
  CHECK(source_ancestors(g, N("MakeAd")) == names({"IP"}));
  CHECK(source_ancestors(g, N("ProcessPicture")) == names({"Camera"}));
  CHECK(source_ancestors(g, N("Camera")) == names({"Camera"}));
  CHECK_FALSE(source_ancestors(g, N("MakeAd")).contains(N("Camera")));

  try {
    source_ancestors(g, N("Nowhere"));
    FAIL("expected NOT_FOUND");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFound);
  }
}

TEST_CASE("DOT export") {
  CHECK(to_dot(FlowGraph{}) == "digraph flow {\n}\n");
  const std::string dot = to_dot(build_flow_graph(webcam::specification()));
  CHECK(dot.find("\n\"MakeAd\" -> \"ComposeDisplay\" [label=\"pull\", style=dashed];\n") !=
        std::string::npos);
  CHECK(dot.find("\"Display\" [shape=diamond];") != std::string::npos);
  CHECK(dot.find("\"MakeAd\" [shape=ellipse];") != std::string::npos);
  CHECK(dot.find("\"Screen\" [shape=box];") != std::string::npos);
  CHECK(dot == read(SCC_GOLDEN_DIR "/webcam.dot"));
}

TEST_CASE("JSON export") {
  const FlowGraph g = build_flow_graph(webcam::specification());
  const std::string text = to_json(g);
  CHECK(text == read(SCC_GOLDEN_DIR "/webcam.json"));
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["nodes"].size() == 7);
  CHECK(doc["edges"].size() == 6);
  CHECK(doc["nodes"][0]["name"] == "Camera");
  CHECK(doc["edges"][0] == nlohmann::json({{"from", "Camera"}, {"to", "ProcessPicture"},
                                           {"kind", "publish"}}));
  CHECK(export_graph(g, ExportFormat::Json) == text);
  CHECK(export_graph(g, ExportFormat::Dot) == to_dot(g));
}

TEST_CASE("graph properties over generated specifications") {
  testing::Rng rng(314);
  for (int iter = 0; iter < 400; ++iter) {
    const Specification spec = testing::random_valid_spec(rng);
    const FlowGraph g = build_flow_graph(spec);

    std::size_t provided = 0, gets = 0, controllers = 0;
    for (const auto& d : spec.declarations) {
      if (const auto* ctx = d.as<ContextDecl>()) {
        provided += ctx->contract.trigger() ? 1 : 0;
        gets += ctx->contract.get_target ? 1 : 0;
      }
      controllers += d.kind() == ComponentKind::Controller ? 1 : 0;
    }
    CHECK(g.edges.size() <= provided + gets + 2 * controllers);
    CHECK(g.nodes.size() == spec.declarations.size());

    // Ancestors agree with the independent transitive-closure oracle.
    const auto oracle = testing::oracle_all_ancestors(spec);
    for (const auto& [name, kind] : g.nodes) {
      std::set<std::string> got;
      for (const auto& a : source_ancestors(g, name)) got.insert(a.str());
      CHECK(got == oracle.at(name.str()));
    }

    // Monotonicity: appending a valid declaration never removes an ancestor.
    Specification bigger = spec;
    std::vector<ComponentName> triggers;
    for (const auto& d : spec.declarations) {
      if (d.kind() == ComponentKind::Source || d.kind() == ComponentKind::Context) {
        triggers.push_back(d.name());
      }
    }
    const ComponentName trig =
        triggers[std::uniform_int_distribution<std::size_t>(0, triggers.size() - 1)(rng)];
    bigger.declarations.push_back(ContextDecl{
        N("Extra"), DataType::Int,
        InteractionContract{WhenProvided{trig}, std::nullopt, PublishSpec::AlwaysPublish}});
    REQUIRE(validate(bigger).empty());
    const FlowGraph g2 = build_flow_graph(bigger);
    for (const auto& [name, kind] : g.nodes) {
      const auto before = source_ancestors(g, name);
      const auto after = source_ancestors(g2, name);
      CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
    CHECK(to_dot(g) == to_dot(build_flow_graph(spec)));
  }
}
