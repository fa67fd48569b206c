#pragma once

// The ad-supported webcam application: pictures from Camera are filtered,
// combined with advertisement text pulled from IP, and shown on Screen. The
// picture can reach Screen but never the ad component.

#include <memory>
#include <string_view>

#include "scc/runtime.hpp"
#include "scc/scenario.hpp"
#include "scc/types.hpp"

namespace scc::webcam {

/// Canonical declarations; identical to demo/webcam.scc.
extern const std::string_view kSpecText;

/// Identical to demo/default.scn.
extern const std::string_view kDefaultScenario;

Specification specification();

struct App {
  Runtime runtime;
  std::shared_ptr<ScriptedSource> camera;
  std::shared_ptr<ScriptedSource> ip;
  std::shared_ptr<RecordingSink> screen;
};

/// Sealed runtime with all four components implemented and the three
/// resources bound to scripted sources and a recording sink.
App build_app();

}  // namespace scc::webcam
