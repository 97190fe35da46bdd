#include "spinframes/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

#include "spinframes/errors.hpp"

namespace spinframes {

namespace {

using json = nlohmann::json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& what) {
  throw ConfigSchemaError(path, what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) {
      schema_error(path + "/" + it.key(), "unknown key");
    }
  }
}

double require_number(const json& obj, const std::string& key,
                      const std::string& path) {
  if (!obj.contains(key)) schema_error(path + "/" + key, "missing field");
  const json& v = obj.at(key);
  if (!v.is_number()) schema_error(path + "/" + key, "expected a number");
  return v.get<double>();
}

double optional_number(const json& obj, const std::string& key,
                       const std::string& path, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) schema_error(path + "/" + key, "expected a number");
  return v.get<double>();
}

std::string require_string(const json& obj, const std::string& key,
                           const std::string& path) {
  if (!obj.contains(key)) schema_error(path + "/" + key, "missing field");
  const json& v = obj.at(key);
  if (!v.is_string()) schema_error(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

CurveSpec parse_curve(const json& obj, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  const std::string kind = lower(require_string(obj, "kind", path));
  CurveSpec spec;
  if (kind == "line") {
    reject_unknown_keys(obj, {"kind"}, path);
    spec = CurveSpec::line();
  } else if (kind == "circle") {
    reject_unknown_keys(obj, {"kind", "r"}, path);
    spec = CurveSpec::circle(require_number(obj, "r", path));
    if (!(spec.r > 0.0)) schema_error(path + "/r", "must be > 0");
  } else if (kind == "helix") {
    reject_unknown_keys(obj, {"kind", "a", "b"}, path);
    spec = CurveSpec::helix(require_number(obj, "a", path),
                            require_number(obj, "b", path));
    if (!(spec.a > 0.0)) schema_error(path + "/a", "must be > 0");
  } else if (kind == "spherelatitude") {
    reject_unknown_keys(obj, {"kind", "alpha"}, path);
    spec = CurveSpec::sphere_latitude(require_number(obj, "alpha", path));
    if (!(spec.alpha > 0.0 && spec.alpha < 3.14159265358979323846)) {
      schema_error(path + "/alpha", "must lie in (0, pi)");
    }
  } else if (kind == "planarparametric") {
    reject_unknown_keys(obj, {"kind", "a", "b"}, path);
    spec = CurveSpec::planar_parametric(require_number(obj, "a", path),
                                        require_number(obj, "b", path));
    if (!(spec.a > 0.0)) schema_error(path + "/a", "must be > 0");
    if (!(spec.b > 0.0)) schema_error(path + "/b", "must be > 0");
  } else {
    schema_error(path + "/kind", "unknown curve kind '" + kind + "'");
  }
  return spec;
}

SurfaceSpec parse_surface(const json& obj, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  const std::string kind = lower(require_string(obj, "kind", path));
  SurfaceSpec spec;
  if (kind == "plane") {
    reject_unknown_keys(obj, {"kind", "orientation"}, path);
    spec = SurfaceSpec::plane();
  } else if (kind == "sphere") {
    reject_unknown_keys(obj, {"kind", "radius", "orientation"}, path);
    spec = SurfaceSpec::sphere(require_number(obj, "radius", path));
  } else if (kind == "cylinder") {
    reject_unknown_keys(obj, {"kind", "radius", "orientation"}, path);
    spec = SurfaceSpec::cylinder(require_number(obj, "radius", path));
  } else {
    schema_error(path + "/kind", "unknown surface kind '" + kind + "'");
  }
  if (spec.kind != SurfaceKind::Plane && !(spec.radius > 0.0)) {
    schema_error(path + "/radius", "must be > 0");
  }
  if (obj.contains("orientation")) {
    const std::string o = lower(require_string(obj, "orientation", path));
    if (o == "outward") {
      spec.orientation = SurfaceOrientation::Outward;
    } else if (o == "inward") {
      spec.orientation = SurfaceOrientation::Inward;
    } else {
      schema_error(path + "/orientation", "expected 'outward' or 'inward'");
    }
  }
  return spec;
}

RunMode parse_mode(const std::string& text, const std::string& path) {
  const std::string m = lower(text);
  if (m == "frenet") return RunMode::Frenet;
  if (m == "darboux") return RunMode::Darboux;
  if (m == "compare") return RunMode::Compare;
  if (m == "theorem2") return RunMode::Theorem2;
  schema_error(path, "unknown mode '" + text + "'");
}

ScenarioConfig parse_scenario(const json& obj, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  reject_unknown_keys(obj,
                      {"name", "mode", "curve", "surface", "s0", "s1", "step",
                       "renormalize", "output_path", "format"},
                      path);

  ScenarioConfig sc;
  sc.name = require_string(obj, "name", path);
  if (sc.name.empty()) schema_error(path + "/name", "must be non-empty");
  sc.mode = parse_mode(require_string(obj, "mode", path), path + "/mode");
  if (!obj.contains("curve")) schema_error(path + "/curve", "missing field");
  sc.curve = parse_curve(obj.at("curve"), path + "/curve");
  if (obj.contains("surface")) {
    sc.surface = parse_surface(obj.at("surface"), path + "/surface");
  }
  sc.s0 = require_number(obj, "s0", path);
  sc.s1 = require_number(obj, "s1", path);
  if (!(sc.s1 > sc.s0)) schema_error(path + "/s1", "requires s1 > s0");
  sc.step = optional_number(obj, "step", path, 1e-3);
  if (!(sc.step > 0.0)) schema_error(path + "/step", "must be > 0");
  if (sc.step > sc.s1 - sc.s0) {
    schema_error(path + "/step", "must not exceed s1 - s0");
  }
  if (obj.contains("renormalize")) {
    const json& v = obj.at("renormalize");
    if (!v.is_boolean()) {
      schema_error(path + "/renormalize", "expected a boolean");
    }
    sc.renormalize = v.get<bool>();
  }
  sc.output_path = require_string(obj, "output_path", path);
  if (sc.output_path.empty()) {
    schema_error(path + "/output_path", "must be non-empty");
  }
  if (obj.contains("format")) {
    const std::string f = lower(require_string(obj, "format", path));
    if (f == "csv") {
      sc.format = OutputFormat::Csv;
    } else if (f == "json") {
      sc.format = OutputFormat::Json;
    } else {
      schema_error(path + "/format", "expected 'csv' or 'json'");
    }
  }
  if ((sc.mode == RunMode::Darboux || sc.mode == RunMode::Theorem2) &&
      !sc.surface) {
    schema_error(path + "/surface",
                 "missing field (required by mode '" + to_string(sc.mode) +
                     "')");
  }
  return sc;
}

}  // namespace

std::vector<ScenarioConfig> parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("/", "expected a top-level object");
  reject_unknown_keys(doc, {"scenarios"}, "");
  if (!doc.contains("scenarios")) schema_error("/scenarios", "missing field");
  const json& arr = doc.at("scenarios");
  if (!arr.is_array()) schema_error("/scenarios", "expected an array");
  if (arr.empty()) schema_error("/scenarios", "must not be empty");

  std::vector<ScenarioConfig> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(
        parse_scenario(arr[i], "/scenarios/" + std::to_string(i)));
  }
  return out;
}

std::string to_string(RunMode m) {
  switch (m) {
    case RunMode::Frenet:
      return "Frenet";
    case RunMode::Darboux:
      return "Darboux";
    case RunMode::Compare:
      return "Compare";
    case RunMode::Theorem2:
      return "Theorem2";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

}  // namespace spinframes
