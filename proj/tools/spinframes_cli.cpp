#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinframes/report_io.hpp"
#include "spinframes/scenario.hpp"
#include "spinframes/verification.hpp"

namespace {

using namespace spinframes;

struct RunFlags {
  std::string config_path;
  std::string curve;
  std::string surface;
  std::string name;
  std::string output;
  std::string format;
  std::string range;
  double step = 0.0;
  bool step_set = false;
  bool renormalize = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " value '" + text + "'");
  }
}

// kind[:p1[,p2]] with lowercase kind names, e.g. "helix:3,4", "circle:1",
// "spherelatitude:0.7853981633974483", "planarparametric:2,1", "line".
CurveSpec parse_curve_flag(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw UsageError("empty --curve value");
  const std::string& kind = parts[0];
  const auto params =
      parts.size() > 1 ? split(parts[1], ',') : std::vector<std::string>{};
  auto param = [&](std::size_t i) {
    if (i >= params.size()) {
      throw UsageError("--curve " + kind + ": missing parameter");
    }
    return parse_real(params[i], "--curve parameter");
  };
  if (kind == "line") return CurveSpec::line();
  if (kind == "circle") return CurveSpec::circle(param(0));
  if (kind == "helix") return CurveSpec::helix(param(0), param(1));
  if (kind == "spherelatitude") return CurveSpec::sphere_latitude(param(0));
  if (kind == "planarparametric") {
    return CurveSpec::planar_parametric(param(0), param(1));
  }
  throw UsageError("unknown curve kind '" + kind + "'");
}

// kind[:radius][:inward|outward], e.g. "cylinder:3", "sphere:1:inward".
SurfaceSpec parse_surface_flag(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw UsageError("empty --surface value");
  const std::string& kind = parts[0];
  SurfaceSpec spec;
  std::size_t orient_idx = 1;
  if (kind == "plane") {
    spec = SurfaceSpec::plane();
  } else if (kind == "sphere" || kind == "cylinder") {
    if (parts.size() < 2) {
      throw UsageError("--surface " + kind + ": missing radius");
    }
    const double radius = parse_real(parts[1], "--surface radius");
    spec = kind == "sphere" ? SurfaceSpec::sphere(radius)
                            : SurfaceSpec::cylinder(radius);
    orient_idx = 2;
  } else {
    throw UsageError("unknown surface kind '" + kind + "'");
  }
  if (parts.size() > orient_idx) {
    const std::string& o = parts[orient_idx];
    if (o == "inward") {
      spec.orientation = SurfaceOrientation::Inward;
    } else if (o == "outward") {
      spec.orientation = SurfaceOrientation::Outward;
    } else {
      throw UsageError("unknown surface orientation '" + o + "'");
    }
  }
  return spec;
}

std::pair<double, double> parse_range_flag(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw UsageError("--range expects S0:S1, got '" + text + "'");
  }
  return {parse_real(parts[0], "--range"), parse_real(parts[1], "--range")};
}

OutputFormat parse_format_flag(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw UsageError("--format expects csv or json, got '" + text + "'");
}

void apply_overrides(const RunFlags& flags, ScenarioConfig& sc) {
  if (!flags.curve.empty()) sc.curve = parse_curve_flag(flags.curve);
  if (!flags.surface.empty()) sc.surface = parse_surface_flag(flags.surface);
  if (!flags.range.empty()) {
    std::tie(sc.s0, sc.s1) = parse_range_flag(flags.range);
  }
  if (flags.step_set) sc.step = flags.step;
  if (flags.renormalize) sc.renormalize = true;
  if (!flags.output.empty()) sc.output_path = flags.output;
  if (!flags.format.empty()) sc.format = parse_format_flag(flags.format);
}

std::vector<ScenarioConfig> load_scenarios(const RunFlags& flags,
                                           RunMode subcommand_mode,
                                           bool force_mode) {
  std::vector<ScenarioConfig> scenarios;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path, std::ios::binary);
    if (!in) {
      throw Error("cannot read config file '" + flags.config_path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    scenarios = parse_config(text.str());
    for (auto& sc : scenarios) {
      if (force_mode) sc.mode = subcommand_mode;
      apply_overrides(flags, sc);
    }
  } else {
    if (flags.curve.empty() || flags.range.empty() || flags.output.empty()) {
      throw UsageError(
          "without --config, the flags --curve, --range and --output are "
          "required");
    }
    ScenarioConfig sc;
    sc.name = flags.name.empty() ? "inline" : flags.name;
    sc.mode = subcommand_mode;
    sc.step = 1e-3;
    apply_overrides(flags, sc);
    scenarios.push_back(std::move(sc));
  }
  return scenarios;
}

int run_scenarios(const std::vector<ScenarioConfig>& scenarios) {
  int failures = 0;
  for (const auto& sc : scenarios) {
    try {
      const ComparisonReport report = compare_run(sc);
      write_report(report, sc.output_path, sc.format);
      std::cout << summary_line(report, sc.output_path) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << sc.name << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

void print_catalog() {
  std::cout << "curve kinds:\n"
               "  Line\n"
               "  Circle(r)\n"
               "  Helix(a, b)\n"
               "  SphereLatitude(alpha)\n"
               "  PlanarParametric(a, b)\n"
               "surface kinds:\n"
               "  Plane\n"
               "  Sphere(radius)\n"
               "  Cylinder(radius)\n";
}

void add_run_flags(CLI::App* cmd, RunFlags& flags) {
  cmd->add_option("--config", flags.config_path,
                  "JSON scenario file {\"scenarios\": [...]}");
  cmd->add_option("--curve", flags.curve,
                  "inline curve, e.g. helix:3,4 or circle:1");
  cmd->add_option("--surface", flags.surface,
                  "inline surface, e.g. cylinder:3 or sphere:1:inward");
  cmd->add_option("--name", flags.name, "run label for inline scenarios");
  cmd->add_option("--output", flags.output, "output file path");
  cmd->add_option("--format", flags.format, "output format: csv or json");
  cmd->add_option("--step", flags.step, "arc-length step")
      ->each([&flags](const std::string&) { flags.step_set = true; });
  cmd->add_option("--range", flags.range, "arc-length range S0:S1");
  cmd->add_flag("--renormalize", flags.renormalize,
                "renormalize states after every step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinframes: moving frames of curves transported as two-component "
      "spinors, checked against classical vector transport"};
  app.require_subcommand(1);

  CLI::App* cmd_list = app.add_subcommand("list", "print the catalog");
  RunFlags flags;
  struct SubSpec {
    const char* name;
    const char* help;
    RunMode mode;
    bool force_mode;
  };
  const SubSpec subs[] = {
      {"frenet", "Frenet transport comparison", RunMode::Frenet, true},
      {"darboux", "Darboux transport comparison", RunMode::Darboux, true},
      {"compare", "comparison run (Darboux when a surface is given)",
       RunMode::Compare, false},
      {"theorem2", "phase relation between the two spinor transports",
       RunMode::Theorem2, true},
  };
  std::vector<std::pair<CLI::App*, SubSpec>> run_cmds;
  for (const SubSpec& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_run_flags(cmd, flags);
    run_cmds.emplace_back(cmd, s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;  // --help
    std::cerr << app.help();
    return 2;
  }

  if (cmd_list->parsed()) {
    print_catalog();
    return 0;
  }

  for (const auto& [cmd, sub] : run_cmds) {
    if (!cmd->parsed()) continue;
    std::vector<ScenarioConfig> scenarios;
    try {
      scenarios = load_scenarios(flags, sub.mode, sub.force_mode);
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n" << cmd->help();
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    return run_scenarios(scenarios);
  }
  return 2;
}
