#include <benchmark/benchmark.h>

#include <string>

#include "scc/flow.hpp"
#include "scc/parser.hpp"
#include "scc/validate.hpp"
#include "scc/webcam.hpp"

namespace {

// Webcam declarations repeated under fresh names, `copies` times.
std::string scaled_spec(int copies) {
  std::string text;
  for (int i = 0; i < copies; ++i) {
    const std::string s = std::to_string(i);
    text += "(define-source Camera" + s + " Picture)\n";
    text += "(define-source IP" + s + " String)\n";
    text += "(define-action Screen" + s + " Picture)\n";
    text += "(define-context MakeAd" + s + " String [when-required get IP" + s + "])\n";
    text += "(define-context ProcessPicture" + s + " Picture [when-provided Camera" + s +
            " always_publish])\n";
    text += "(define-context ComposeDisplay" + s + " Picture [when-provided ProcessPicture" + s +
            " get MakeAd" + s + " maybe_publish])\n";
    text += "(define-controller Display" + s + " [when-provided ComposeDisplay" + s +
            " do Screen" + s + "])\n";
  }
  return text;
}

void BM_ParseValidate(benchmark::State& state) {
  const std::string text = scaled_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto spec = scc::parse(scc::SourceText{text});
    benchmark::DoNotOptimize(scc::validate(spec));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseValidate)->Arg(1)->Arg(16)->Arg(256);

void BM_FlowGraph(benchmark::State& state) {
  const auto spec = scc::parse(scc::SourceText{scaled_spec(static_cast<int>(state.range(0)))});
  for (auto _ : state) {
    const auto g = scc::build_flow_graph(spec);
    benchmark::DoNotOptimize(scc::source_ancestors(g, g.nodes.rbegin()->first));
  }
}
BENCHMARK(BM_FlowGraph)->Arg(1)->Arg(16)->Arg(256);

void BM_WebcamEmit(benchmark::State& state) {
  auto app = scc::webcam::build_app();
  app.runtime.set_source("IP", scc::Value("Ads Inc"));
  const scc::Value frame = scc::make_picture(640, 480, 7);
  for (auto _ : state) app.runtime.emit("Camera", frame);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_WebcamEmit);

}  // namespace

BENCHMARK_MAIN();
