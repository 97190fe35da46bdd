#include "spinframes/report_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "spinframes/errors.hpp"
#include "spinframes/format.hpp"

namespace spinframes {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kCsvHeader =
    "s,T_x,T_y,T_z,e1_x,e1_y,e1_z,e2_x,e2_y,e2_z,kappa_like_1,kappa_like_2,"
    "kappa_like_3,err_spinor_vs_vector,err_vs_analytic,norm_drift,theta,"
    "theorem2_residual";

std::string cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

ordered_json json_vec(const Vec3R& v) {
  return ordered_json::array({v.x, v.y, v.z});
}

ordered_json json_opt(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string to_csv(const ComparisonReport& report) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : report.samples) {
    out += format_double(r.s);
    for (const Vec3R* v : {&r.frame.T, &r.frame.e1, &r.frame.e2}) {
      out += ',';
      out += format_double(v->x);
      out += ',';
      out += format_double(v->y);
      out += ',';
      out += format_double(v->z);
    }
    out += ',';
    out += format_double(r.curvature.k1);
    out += ',';
    out += format_double(r.curvature.k2);
    out += ',';
    out += cell(r.curvature.k3);
    out += ',';
    out += format_double(r.err_spinor_vs_vector);
    out += ',';
    out += format_double(r.err_vs_analytic);
    out += ',';
    out += format_double(r.norm_drift);
    out += ',';
    out += cell(r.theta);
    out += ',';
    out += cell(r.theorem2);
    out += '\n';
  }
  return out;
}

std::string to_json(const ComparisonReport& report) {
  ordered_json doc;
  doc["scenario"] = report.scenario;

  ordered_json meta;
  meta["run_label"] = report.scenario;
  meta["family"] =
      report.family == FrameFamily::Frenet ? "Frenet" : "Darboux";
  meta["curve"] = report.curve_label;
  meta["surface"] = report.surface_label.empty()
                        ? ordered_json(nullptr)
                        : ordered_json(report.surface_label);
  meta["s0"] = report.s0;
  meta["s1"] = report.s1;
  meta["step"] = report.step;
  meta["renormalize"] = report.renormalized;
  meta["samples"] = report.samples.size();
  doc["metadata"] = std::move(meta);

  ordered_json samples = ordered_json::array();
  for (const auto& r : report.samples) {
    ordered_json row;
    row["s"] = r.s;
    row["T"] = json_vec(r.frame.T);
    row["e1"] = json_vec(r.frame.e1);
    row["e2"] = json_vec(r.frame.e2);
    row["kappa_like_1"] = r.curvature.k1;
    row["kappa_like_2"] = r.curvature.k2;
    row["kappa_like_3"] = json_opt(r.curvature.k3);
    row["err_spinor_vs_vector"] = r.err_spinor_vs_vector;
    row["err_vs_analytic"] = r.err_vs_analytic;
    row["norm_drift"] = r.norm_drift;
    row["theta"] = json_opt(r.theta);
    row["theorem2_residual"] = json_opt(r.theorem2);
    row["tangent_gap"] = json_opt(r.tangent_gap);
    samples.push_back(std::move(row));
  }
  doc["samples"] = std::move(samples);

  ordered_json sum;
  sum["max_err_spinor_vs_vector"] = report.summary.max_err_spinor_vs_vector;
  sum["mean_err_spinor_vs_vector"] = report.summary.mean_err_spinor_vs_vector;
  sum["max_err_vs_analytic"] = report.summary.max_err_vs_analytic;
  sum["mean_err_vs_analytic"] = report.summary.mean_err_vs_analytic;
  sum["max_norm_drift"] = report.summary.max_norm_drift;
  sum["mean_norm_drift"] = report.summary.mean_norm_drift;
  sum["max_theorem2_residual"] = json_opt(report.summary.max_theorem2);
  sum["mean_theorem2_residual"] = json_opt(report.summary.mean_theorem2);
  sum["max_tangent_gap"] = json_opt(report.summary.max_tangent_gap);
  doc["summary"] = std::move(sum);

  return doc.dump(2) + "\n";
}

std::string summary_line(const ComparisonReport& report,
                         const std::string& output_path) {
  std::string line = report.scenario + ": max_frame_err=" +
                     format_double(report.summary.max_err_spinor_vs_vector) +
                     " max_vs_analytic=" +
                     format_double(report.summary.max_err_vs_analytic) +
                     " max_norm_drift=" +
                     format_double(report.summary.max_norm_drift);
  if (report.summary.max_theorem2) {
    line += " max_theorem2=" + format_double(*report.summary.max_theorem2);
  }
  line += " -> " + output_path;
  return line;
}

void write_report(const ComparisonReport& report,
                  const std::string& output_path, OutputFormat format) {
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw Error("cannot open output file '" + output_path + "'");
  }
  out << (format == OutputFormat::Csv ? to_csv(report) : to_json(report));
  if (!out) {
    throw Error("failed writing output file '" + output_path + "'");
  }
}

}  // namespace spinframes
