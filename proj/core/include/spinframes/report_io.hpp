#ifndef SPINFRAMES_REPORT_IO_HPP
#define SPINFRAMES_REPORT_IO_HPP

#include <string>

#include "spinframes/verification.hpp"

namespace spinframes {

/// CSV with one header row and one row per grid sample. Column order is fixed:
///   s, T_x, T_y, T_z, e1_x, e1_y, e1_z, e2_x, e2_y, e2_z,
///   kappa_like_1, kappa_like_2, kappa_like_3,
///   err_spinor_vs_vector, err_vs_analytic, norm_drift, theta,
///   theorem2_residual
/// Absent values (kappa_like_3/theta/theorem2_residual on Frenet runs) are
/// empty cells. Reals use shortest round-trip formatting.
std::string to_csv(const ComparisonReport& report);

/// JSON mirror of the report: config-supplied run label and grid metadata,
/// a per-sample array and the summary object.
std::string to_json(const ComparisonReport& report);

/// One deterministic console line per scenario.
std::string summary_line(const ComparisonReport& report,
                         const std::string& output_path);

/// Serializes the report in the requested format to output_path.
void write_report(const ComparisonReport& report, const std::string& output_path,
                  OutputFormat format);

}  // namespace spinframes

#endif
