#include "scc/webcam.hpp"

#include "scc/parser.hpp"

namespace scc::webcam {

const std::string_view kSpecText =
    R"(; Ad-supported webcam viewer.
; Camera, IP and Screen are platform resources.
(define-source Camera Picture)
(define-source IP String)
(define-action Screen Picture)

(define-context MakeAd String [when-required get IP])
(define-context ProcessPicture Picture
  [when-provided Camera always_publish])
(define-context ComposeDisplay Picture
  [when-provided ProcessPicture get MakeAd
     maybe_publish])
(define-controller Display
  [when-provided ComposeDisplay do Screen])
)";

const std::string_view kDefaultScenario =
    R"(# Ad text is available, then one camera frame arrives.
set IP "Ads Inc"
emit Camera picture(640x480,seed=7)
)";

Specification specification() {
  return parse(SourceText{std::string(kSpecText), "webcam.scc"});
}

App build_app() {
  App app{Runtime(specification()), std::make_shared<ScriptedSource>(),
          std::make_shared<ScriptedSource>(), std::make_shared<RecordingSink>()};
  Runtime& rt = app.runtime;

  rt.implement("MakeAd", [](GetHandle ip) { return ip(); });

  // The colour filter leaves the simulated payload unchanged.
  rt.implement("ProcessPicture",
               [](const Value& pic, PublishHandle publish) { publish(pic); });

  rt.implement("ComposeDisplay", [](const Value& pic, GetHandle get_ad, PublishHandle publish,
                                    NoPublishHandle nopublish) {
    const Value ad = get_ad();
    if (ad.as_string().empty()) nopublish();
    publish(Value(overlay(pic.as_picture(), ad.as_string())));
  });

  rt.implement("Display", [](const Value& pic, DoHandle screen) { screen(pic); });

  rt.bind_source("Camera", app.camera);
  rt.bind_source("IP", app.ip);
  rt.bind_action("Screen", app.screen);
  rt.seal();
  return app;
}

}  // namespace scc::webcam
