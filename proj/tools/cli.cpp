#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scc/contract.hpp"
#include "scc/error.hpp"
#include "scc/flow.hpp"
#include "scc/parser.hpp"
#include "scc/scenario.hpp"
#include "scc/validate.hpp"
#include "scc/webcam.hpp"

namespace scc::cli {
namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

void print_parse_error(std::ostream& err, const ParseError& e) {
  err << e.origin() << ":" << e.line() << ":" << e.column() << ": " << to_string(e.code())
      << ": " << e.detail() << "\n";
}

// Parses and validates; prints diagnostics and returns nullopt on failure.
std::optional<Specification> load_spec(const std::string& path, const std::string& text,
                                       std::ostream& err) {
  LocatedSpecification located;
  try {
    located = parse_located(SourceText{text, path});
  } catch (const ParseError& e) {
    print_parse_error(err, e);
    return std::nullopt;
  }
  ValidationReport report = validate(located.spec);
  for (const auto& d : report) {
    const SourceLocation& loc = located.locations.at(d.index);
    err << path << ":" << loc.line << ":" << loc.column << ": " << to_string(d.code) << ": "
        << d.message << "\n";
  }
  if (!report.empty()) return std::nullopt;
  return std::move(located.spec);
}

int cmd_check(const std::string& path, bool contracts, std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << "scc: cannot read '" << path << "'\n";
    return kUsage;
  }
  auto spec = load_spec(path, *text, err);
  if (!spec) return kFailed;
  if (contracts) {
    for (const auto& d : spec->declarations) {
      if (d.kind() != ComponentKind::Context && d.kind() != ComponentKind::Controller) continue;
      out << d.name().str() << " : " << render_contract(derive_contract(*spec, d.name()))
          << "\n";
    }
  }
  return kOk;
}

int cmd_graph(const std::string& path, const std::string& format, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << "scc: cannot read '" << path << "'\n";
    return kUsage;
  }
  auto spec = load_spec(path, *text, err);
  if (!spec) return kFailed;
  const std::string rendered = export_graph(
      build_flow_graph(*spec), format == "json" ? ExportFormat::Json : ExportFormat::Dot);
  if (out_path.empty() || out_path == "-") {
    out << rendered;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!(file << rendered)) {
    err << "scc: cannot write '" << out_path << "'\n";
    return kUsage;
  }
  return kOk;
}

void print_log(const Runtime& rt, std::ostream& out) {
  for (const auto& rec : rt.action_log()) {
    out << rec.action.str() << " <- " << format_value(rec.value.value)
        << " taints=" << format_taints(rec.value.taints) << "\n";
  }
}

int cmd_demo(const std::string& scenario_path, bool trace, std::ostream& out,
             std::ostream& err) {
  std::string text(webcam::kDefaultScenario);
  std::string origin = "default.scn";
  if (!scenario_path.empty()) {
    auto file = read_file(scenario_path);
    if (!file) {
      err << "scc: cannot read '" << scenario_path << "'\n";
      return kUsage;
    }
    text = std::move(*file);
    origin = scenario_path;
  }

  Scenario scenario;
  try {
    scenario = parse_scenario(text, origin);
  } catch (const ParseError& e) {
    print_parse_error(err, e);
    return kFailed;
  }

  webcam::App app = webcam::build_app();
  if (trace) {
    app.runtime.set_trace([&err](const TraceEvent& e) { err << "trace: " << format_trace(e) << "\n"; });
  }
  try {
    run_scenario(app.runtime, scenario);
  } catch (const StepError& e) {
    print_log(app.runtime, out);
    err << "error: " << (e.component().empty() ? "-" : e.component()) << ": "
        << to_string(e.code()) << ": " << e.detail() << "\n";
    return kFailed;
  }
  print_log(app.runtime, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sense/Compute/Control declaration checker and runtime", "scc"};
  app.require_subcommand(1);

  std::string spec_path;
  bool contracts = false;
  auto* check = app.add_subcommand("check", "Parse and validate a declaration file");
  check->add_option("spec", spec_path, "Declaration file (.scc)")->required();
  check->add_flag("--contracts", contracts, "Print the derived boundary contracts");

  std::string format = "dot";
  std::string out_path;
  auto* graph = app.add_subcommand("graph", "Export the information-flow graph");
  graph->add_option("spec", spec_path, "Declaration file (.scc)")->required();
  graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out_path, "Output path (default: stdout)");

  std::string scenario_path;
  bool trace = false;
  auto* demo = app.add_subcommand("demo", "Run the bundled webcam application");
  demo->add_option("--scenario", scenario_path, "Scenario file (.scn)");
  demo->add_flag("--trace", trace, "Print every activation and pull");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(spec_path, contracts, out, err);
    if (*graph) return cmd_graph(spec_path, format, out_path, out, err);
    return cmd_demo(scenario_path, trace, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace scc::cli
