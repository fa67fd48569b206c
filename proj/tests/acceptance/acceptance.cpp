// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "generators.hpp"
#include "scc/contract.hpp"
#include "scc/error.hpp"
#include "scc/flow.hpp"
#include "scc/parser.hpp"
#include "scc/runtime.hpp"
#include "scc/scenario.hpp"
#include "scc/validate.hpp"
#include "scc/webcam.hpp"

namespace fs = std::filesystem;
using namespace scc;

namespace {

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string read(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<ErrorCode> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Specification spec_of(const std::string& text) { return parse(SourceText{text}); }

void grammar_fidelity(Check& c) {
  const std::string text = read(SCC_DEMO_DIR "/webcam.scc");
  c.expect(!text.empty(), "webcam.scc is readable");
  const Specification spec = spec_of(text);
  c.expect(spec.declarations.size() == 7, "seven declarations");
  c.expect(validate(spec).empty(), "zero diagnostics");
  c.expect(spec_of(pretty_print(spec)) == spec, "pretty-print round-trips");
}

void contract_fidelity(Check& c) {
  const std::string got =
      render_contract(derive_contract(webcam::specification(), ComponentName("ComposeDisplay")));
  c.expect(got == "(-> picture? (-> string?) (-> picture? void?) (-> void?) none/c)",
           "ComposeDisplay renders as " + got);
}

void validation_rules(Check& c) {
  auto only = [&](const Specification& spec, DiagCode code, const std::string& label) {
    const ValidationReport r = validate(spec);
    bool ok = !r.empty();
    for (const auto& d : r) ok = ok && d.code == code;
    c.expect(ok, label + " yields only " + std::string(to_string(code)));
  };

  only(spec_of("(define-source S Int)"
               "(define-context P Int [when-provided S always_publish])"
               "(define-context Q Int [when-provided S get P always_publish])"),
       DiagCode::PullNotRequired, "pull from a when-provided context");

  Specification publish_on_required{{ContextDecl{
      ComponentName("R"), DataType::Int,
      InteractionContract{WhenRequired{}, std::nullopt, PublishSpec::AlwaysPublish}}}};
  only(publish_on_required, DiagCode::BadPublishSpec, "when-required with a publish spec");

  only(spec_of("(define-context R Int [when-required get Nowhere])"), DiagCode::UnresolvedRef,
       "unresolved reference");
  only(spec_of("(define-source A Int)(define-action A Int)"), DiagCode::DupName,
       "duplicate name");
  only(spec_of("(define-context A Int [when-required get B])"
               "(define-context B Int [when-required get A])"),
       DiagCode::GetCycle, "get cycle");
}

void end_to_end_demo(Check& c) {
  auto app = webcam::build_app();
  run_scenario(app.runtime, parse_scenario(read(SCC_DEMO_DIR "/default.scn")));
  const auto& log = app.runtime.action_log();
  c.expect(log.size() == 1, "one Screen delivery");
  if (log.size() == 1) {
    c.expect(log[0].action == ComponentName("Screen"), "delivered to Screen");
    c.expect(log[0].value.value.as_picture().overlays == std::vector<std::string>{"Ads Inc"},
             "overlays = [\"Ads Inc\"]");
    c.expect(log[0].value.taints == TaintSet{ComponentName("Camera"), ComponentName("IP")},
             "taints = {Camera,IP}");
  }

  auto empty = webcam::build_app();
  run_scenario(empty.runtime, parse_scenario(read(SCC_DEMO_DIR "/empty_ad.scn")));
  c.expect(empty.runtime.action_log().empty(), "empty ad yields zero deliveries");
}

Runtime single_context(Implementation body) {
  Runtime rt(spec_of("(define-source S Int)"
                     "(define-context P Int [when-provided S always_publish])"));
  rt.implement("P", std::move(body));
  rt.bind_source("S", std::make_shared<ScriptedSource>());
  rt.seal();
  return rt;
}

void continuation_discipline(Check& c) {
  Runtime silent = single_context([](const Value&, PublishHandle) {});
  c.expect(code_of([&] { silent.emit("S", Value(1)); }) == ErrorCode::NoContinuationCalled,
           "return without publishing is NO_CONTINUATION_CALLED");

  Runtime twice = single_context([](const Value& v, PublishHandle publish) {
    try {
      publish(v);
    } catch (...) {
    }
    publish(v);
  });
  c.expect(code_of([&] { twice.emit("S", Value(1)); }) == ErrorCode::DoubleContinuation,
           "second publish is DOUBLE_CONTINUATION");
}

void completeness_checks(Check& c) {
  Runtime rt(webcam::specification());
  rt.implement("MakeAd", [](GetHandle ip) { return ip(); });
  rt.implement("ProcessPicture", [](const Value& v, PublishHandle p) { p(v); });
  rt.implement("ComposeDisplay",
               [](const Value& v, GetHandle, PublishHandle p, NoPublishHandle) { p(v); });
  rt.bind_source("Camera", std::make_shared<ScriptedSource>());
  rt.bind_source("IP", std::make_shared<ScriptedSource>());
  rt.bind_action("Screen", std::make_shared<RecordingSink>());
  try {
    rt.seal();
    c.expect(false, "seal with Display missing must fail");
  } catch (const Error& e) {
    c.expect(e.code() == ErrorCode::MissingImplementation, "MISSING_IMPLEMENTATION");
    c.expect(e.names() == std::vector<std::string>{"Display"}, "names Display");
  }
  c.expect(code_of([&] {
             rt.implement("MakeAd", [](GetHandle ip) { return ip(); });
           }) == ErrorCode::DuplicateImplementation,
           "second MakeAd registration is DUPLICATE_IMPLEMENTATION");
}

void taint_soundness(Check& c) {
  constexpr int kSpecs = 500;
  constexpr int kEmissions = 20;
  testing::Rng rng(0xacce55);
  std::size_t deliveries = 0;
  for (int iter = 0; iter < kSpecs; ++iter) {
    const Specification spec = testing::random_valid_spec(rng);
    const FlowGraph graph = build_flow_graph(spec);
    const auto oracle = testing::oracle_all_ancestors(spec);

    auto sound = [&](const ComponentName& receiver, const TaintSet& taints) {
      ++deliveries;
      const auto allowed = source_ancestors(graph, receiver);
      const auto& expected = oracle.at(receiver.str());
      for (const auto& t : taints) {
        if (!allowed.contains(t) || !expected.contains(t.str())) {
          c.expect(false, "spec " + std::to_string(iter) + ": " + t.str() + " reached " +
                              receiver.str());
        }
      }
    };

    Runtime rt(spec);
    testing::wire_random(rt, rng);
    rt.set_trace([&](const TraceEvent& e) {
      if (!e.value) return;
      if (e.kind == TraceKind::Activate || e.kind == TraceKind::Pull) {
        sound(e.component, e.value->taints);
      } else if (e.kind == TraceKind::Command) {
        sound(*e.peer, e.value->taints);
      }
    });
    std::vector<ComponentName> sources;
    for (const auto& d : spec.declarations) {
      if (d.kind() == ComponentKind::Source) sources.push_back(d.name());
    }
    for (int i = 0; i < kEmissions; ++i) {
      const auto& s =
          sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
      rt.emit(s.str(), testing::random_value(output_type_of(spec, s), rng));
    }
    for (const auto& r : rt.action_log()) sound(r.action, r.value.taints);
  }
  c.expect(deliveries > 0, "some values were delivered");
  if (c.failures.size() > 5) c.failures.resize(5);
}

void leak_freedom(Check& c) {
  const FlowGraph g = build_flow_graph(webcam::specification());
  const ComponentName camera("Camera");
  const ComponentName make_ad("MakeAd");
  c.expect(!source_ancestors(g, make_ad).contains(camera), "Camera is not an ancestor of MakeAd");
  c.expect(!testing::oracle_source_ancestors(webcam::specification(), "MakeAd").contains("Camera"),
           "oracle agrees");

  testing::Rng rng(0x1eaf);
  std::size_t violations = 0;
  std::size_t observed = 0;
  for (int iter = 0; iter < 500; ++iter) {
    auto app = webcam::build_app();
    app.runtime.set_trace([&](const TraceEvent& e) {
      const bool into = e.component == make_ad;
      const bool out = e.kind == TraceKind::Pull && e.peer == make_ad;
      if ((into || out) && e.value) {
        ++observed;
        if (e.value->taints.contains(camera)) ++violations;
      }
    });
    run_scenario(app.runtime, testing::random_webcam_scenario(rng));
  }
  c.expect(observed > 0, "MakeAd traffic was observed");
  c.expect(violations == 0, std::to_string(violations) + " Camera-tainted values at MakeAd");
}

void determinism(Check& c) {
  const fs::path dir = fs::temp_directory_path() / "scc_acceptance";
  fs::create_directories(dir);
  std::vector<fs::path> scenarios = {SCC_DEMO_DIR "/default.scn", SCC_DEMO_DIR "/empty_ad.scn"};
  testing::Rng rng(0xd37);
  for (int i = 0; i < 25; ++i) {
    const fs::path p = dir / ("random" + std::to_string(i) + ".scn");
    std::ofstream(p, std::ios::binary) << format_scenario(testing::random_webcam_scenario(rng));
    scenarios.push_back(p);
  }

  for (const auto& p : scenarios) {
    std::string outs[2];
    int codes[2];
    for (int run = 0; run < 2; ++run) {
      std::ostringstream out, err;
      codes[run] = cli::run({"demo", "--trace", "--scenario", p.string()}, out, err);
      outs[run] = out.str() + "\x1f" + err.str();
    }
    c.expect(codes[0] == 0 && codes[1] == 0, p.filename().string() + " exits 0");
    c.expect(outs[0] == outs[1], p.filename().string() + " output differs between runs");

    const Scenario sc = parse_scenario(read(p));
    auto a = webcam::build_app();
    auto b = webcam::build_app();
    run_scenario(a.runtime, sc);
    run_scenario(b.runtime, sc);
    c.expect(a.runtime.action_log() == b.runtime.action_log(),
             p.filename().string() + " action logs differ");
  }
}

void export_stability(Check& c) {
  const FlowGraph g = build_flow_graph(webcam::specification());
  c.expect(to_dot(g) == read(SCC_GOLDEN_DIR "/webcam.dot"), "DOT matches golden");
  c.expect(to_json(g) == read(SCC_GOLDEN_DIR "/webcam.json"), "JSON matches golden");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Check&)>> criteria = {
      {"grammar fidelity", grammar_fidelity},
      {"contract fidelity", contract_fidelity},
      {"validation rules", validation_rules},
      {"end-to-end demo", end_to_end_demo},
      {"continuation discipline", continuation_discipline},
      {"completeness checks", completeness_checks},
      {"taint soundness", taint_soundness},
      {"leak-freedom", leak_freedom},
      {"determinism", determinism},
      {"export stability", export_stability},
  };

  int failed = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << n << " " << name << " (" << ms << " ms)\n";
    for (const auto& f : c.failures) std::cout << "       " << f << "\n";
  }
  std::cout << (n - failed) << "/" << n << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
