#ifndef SPINFRAMES_SCENARIO_HPP
#define SPINFRAMES_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinframes/catalog.hpp"

namespace spinframes {

/// Frenet: spinor-vs-vector Frenet transport along the curve.
/// Darboux: spinor-vs-vector Darboux transport along a curve on a surface.
/// Compare: Darboux when a surface is given, Frenet otherwise.
/// Theorem2: Darboux run whose point is the phase relation between the two
/// spinor formulations.
enum class RunMode { Frenet, Darboux, Compare, Theorem2 };

enum class OutputFormat { Csv, Json };

struct ScenarioConfig {
  std::string name;
  RunMode mode = RunMode::Compare;
  CurveSpec curve;
  std::optional<SurfaceSpec> surface;
  double s0 = 0.0;
  double s1 = 0.0;
  double step = 1e-3;
  bool renormalize = false;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
};

/// Parses a JSON document {"scenarios": [ ... ]} into validated configs.
/// Unknown keys are rejected. Throws ConfigParseError for malformed JSON and
/// ConfigSchemaError (with a JSON-pointer-style path) for missing or invalid
/// fields.
std::vector<ScenarioConfig> parse_config(const std::string& text);

std::string to_string(RunMode m);
std::string to_string(OutputFormat f);

}  // namespace spinframes

#endif
