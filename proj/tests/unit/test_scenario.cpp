#include <string>

#include "doctest.h"
#include "generators.hpp"
#include "scc/error.hpp"
#include "scc/scenario.hpp"
#include "scc/value.hpp"
#include "scc/webcam.hpp"

using namespace scc;

namespace {

ParseError scenario_failure(const std::string& text) {
  try {
    parse_scenario(text, "t.scn");
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a scenario parse error for: " << text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("scenario lines") {
  CHECK(parse_scenario("").steps.empty());
  CHECK(parse_scenario("\n# only comments\n   \n").steps.empty());

  const Scenario set = parse_scenario("set IP \"Ads Inc\"");
  REQUIRE(set.steps.size() == 1);
  CHECK(set.steps[0].kind == ScenarioStep::Kind::Set);
  CHECK(set.steps[0].source.str() == "IP");
  CHECK(set.steps[0].value == Value("Ads Inc"));
  CHECK(set.steps[0].line == 1);

  const Scenario emit = parse_scenario("\nemit Camera picture(640x480,seed=7)  # frame\n");
  REQUIRE(emit.steps.size() == 1);
  CHECK(emit.steps[0].kind == ScenarioStep::Kind::Emit);
  CHECK(emit.steps[0].value.as_picture() == PictureData{640, 480, 7, {}});
  CHECK(emit.steps[0].line == 2);
}

TEST_CASE("literals") {
  CHECK(parse_literal("true") == Value(true));
  CHECK(parse_literal("false") == Value(false));
  CHECK(parse_literal("-42") == Value(-42));
  CHECK(parse_literal("\"a \\\"b\\\" \\\\ c\"") == Value("a \"b\" \\ c"));
  CHECK(parse_literal("\"# not a comment\"") == Value("# not a comment"));
  CHECK(parse_literal("picture(2x3,seed=-1,overlays=[\"x\",\"y\"])").as_picture() ==
        PictureData{2, 3, -1, {"x", "y"}});
}

TEST_CASE("scenario errors carry positions") {
  SUBCASE("unknown verb") {
    auto e = scenario_failure("set A 1\npublish A 1");
    CHECK(e.code() == ErrorCode::ScenarioParseError);
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
    CHECK(e.origin() == "t.scn");
  }
  SUBCASE("bad literal") {
    auto e = scenario_failure("emit Camera pic(1x1,seed=1)");
    CHECK(e.line() == 1);
    CHECK(e.column() == 13);
  }
  SUBCASE("unterminated string") { scenario_failure("set IP \"Ads"); }
  SUBCASE("missing literal") { scenario_failure("set IP"); }
  SUBCASE("trailing garbage") { scenario_failure("set IP 1 2"); }
  SUBCASE("bad name") { scenario_failure("set 1P 1"); }
  SUBCASE("zero-size picture") {
    CHECK(scenario_failure("emit C picture(0x10,seed=1)").code() == ErrorCode::ScenarioParseError);
  }
  SUBCASE("integer overflow") { scenario_failure("set N 99999999999999999999"); }
}

TEST_CASE("pictures") {
  const PictureData p = make_picture_data(640, 480, 7);
  const PictureData q = overlay(p, "Ads Inc");
  CHECK(q == PictureData{640, 480, 7, {"Ads Inc"}});
  CHECK(p.overlays.empty());
  CHECK(overlay(q, "more").overlays == std::vector<std::string>{"Ads Inc", "more"});
  CHECK(overlay(overlay(p, "a"), "b") == PictureData{640, 480, 7, {"a", "b"}});

  for (auto [w, h] : {std::pair{0, 10}, std::pair{10, 0}, std::pair{-1, 1}}) {
    try {
      make_picture(w, h, 1);
      FAIL("expected BAD_DIMENSIONS");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadDimensions);
    }
  }
  CHECK(format_value(make_picture(640, 480, 7)) == "picture(640x480,seed=7)");
  CHECK(format_value(Value(overlay(p, "Ads Inc"))) ==
        "picture(640x480,seed=7,overlays=[\"Ads Inc\"])");
}

TEST_CASE("recording sink keeps order and values") {
  RecordingSink sink;
  Value a = make_picture(1, 1, 1);
  sink.deliver(a);
  sink.deliver(Value(2));
  a = Value(3);
  CHECK(sink.deliveries() == std::vector<Value>{make_picture(1, 1, 1), Value(2)});
}

TEST_CASE("scenario round-trip over random scenarios") {
  testing::Rng rng(1234);
  const DataType types[] = {DataType::Bool, DataType::Int, DataType::String, DataType::Picture};
  for (int iter = 0; iter < 500; ++iter) {
    Scenario sc;
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < n; ++i) {
      const auto kind = (rng() & 1) ? ScenarioStep::Kind::Set : ScenarioStep::Kind::Emit;
      Value v = testing::random_value(types[rng() % 4], rng);
      if (v.type() == DataType::Picture && (rng() & 1)) {
        v = Value(overlay(v.as_picture(), "o\"\\ #x"));
      }
      sc.steps.push_back({kind, ComponentName("S" + std::to_string(rng() % 5)), v});
    }
    CHECK(parse_scenario(format_scenario(sc)) == sc);
  }
}

TEST_CASE("run_scenario") {
  SUBCASE("demo scenario") {
    auto app = webcam::build_app();
    run_scenario(app.runtime, parse_scenario(std::string(webcam::kDefaultScenario)));
    CHECK(app.runtime.action_log().size() == 1);
  }
  SUBCASE("empty scenario") {
    auto app = webcam::build_app();
    run_scenario(app.runtime, Scenario{});
    CHECK(app.runtime.action_log().empty());
  }
  SUBCASE("undeclared source is tagged with the step index") {
    auto app = webcam::build_app();
    try {
      run_scenario(app.runtime, parse_scenario("set IP \"x\"\n\n# c\nset Radio 1\n"));
      FAIL("expected StepError");
    } catch (const StepError& e) {
      CHECK(e.code() == ErrorCode::UndeclaredComponent);
      CHECK(e.step() == 1);
      CHECK(e.line() == 4);
    }
  }
  SUBCASE("runtime errors keep their component") {
    auto app = webcam::build_app();
    try {
      run_scenario(app.runtime, parse_scenario("emit Camera picture(1x1,seed=1)"));
      FAIL("expected StepError");
    } catch (const StepError& e) {
      CHECK(e.code() == ErrorCode::PullBeforeValue);
      CHECK(e.component() == "MakeAd");
      CHECK(e.step() == 0);
    }
  }
}
