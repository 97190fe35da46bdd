#ifndef SPINFRAMES_VERIFICATION_HPP
#define SPINFRAMES_VERIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinframes/evolution.hpp"
#include "spinframes/frames.hpp"
#include "spinframes/scenario.hpp"
#include "spinframes/spinor.hpp"

namespace spinframes {

/// Max over the three paired vectors of the Euclidean distance; 0 iff the
/// triads are identical.
double frame_distance(const Triad& t1, const Triad& t2);

/// The triad carried by a frame state: {e1, e2, T}. This is the ordering the
/// spinor correspondence uses ({N, B, T} for Frenet, {g, n, T} for Darboux).
inline Triad as_triad(const FrameState& st) { return {st.e1, st.e2, st.T}; }

/// Canonical branch of the spinor pair: Re(psi1) >= 0, ties broken by
/// Im(psi1) >= 0, then Re(psi2) >= 0, then Im(psi2) >= 0.
Spinor canonical_spinor(const std::pair<Spinor, Spinor>& pair);

/// Lifts a frame trajectory to a continuous spinor trajectory. The first
/// sample takes the canonical branch; each later sample keeps the sign that
/// minimizes |psi(s_{k+1}) - psi(s_k)|. Propagates NotOrthonormalError from
/// frames failing the triad gate.
Trajectory<Spinor> spinor_lift(const Trajectory<FrameState>& frames);

/// Residuals of the phase relation between the Frenet spinor psi and the
/// Darboux spinor phi at frame phase theta:
///   residual    = || sigma(psi,psi) - e^{i theta} sigma(phi,phi) ||
///   tangent_gap = | T_psi - T_phi |  with T = -mate(.)^t sigma (.)
struct Theorem2Residual {
  double residual = 0.0;
  double tangent_gap = 0.0;
};

Theorem2Residual theorem2_residual(const Spinor& psi, const Spinor& phi,
                                   FramePhase theta);

/// Driving curvature values at one sample: (kappa, tau) for Frenet runs,
/// (kappa_g, kappa_n, tau_g) for Darboux runs.
struct CurvatureSample {
  double k1 = 0.0;
  double k2 = 0.0;
  std::optional<double> k3;
};

struct ComparisonSample {
  double s = 0.0;
  FrameState frame;  // vector-transport state
  CurvatureSample curvature;
  double err_spinor_vs_vector = 0.0;
  double err_vs_analytic = 0.0;
  double norm_drift = 0.0;
  std::optional<double> theta;  // unwrapped frame phase
  std::optional<double> theorem2;
  std::optional<double> tangent_gap;
};

struct ComparisonSummary {
  double max_err_spinor_vs_vector = 0.0;
  double mean_err_spinor_vs_vector = 0.0;
  double max_err_vs_analytic = 0.0;
  double mean_err_vs_analytic = 0.0;
  double max_norm_drift = 0.0;
  double mean_norm_drift = 0.0;
  std::optional<double> max_theorem2;
  std::optional<double> mean_theorem2;
  std::optional<double> max_tangent_gap;
};

enum class FrameFamily { Frenet, Darboux };

struct ComparisonReport {
  std::string scenario;
  FrameFamily family = FrameFamily::Frenet;
  std::string curve_label;
  std::string surface_label;  // empty for Frenet runs
  double s0 = 0.0;
  double s1 = 0.0;
  double step = 0.0;
  bool renormalized = false;
  std::vector<ComparisonSample> samples;
  ComparisonSummary summary;
};

/// Recomputes the summary from the per-sample records.
ComparisonSummary summarize(const std::vector<ComparisonSample>& samples);

/// Runs the applicable vector and spinor systems of a scenario on one grid
/// and measures their agreement. The initial frame comes from the analytic
/// apparatus at s0 and the initial spinor from its canonical lift. Darboux
/// scenarios with kappa > 0 additionally carry the unwrapped frame phase and
/// the phase-relation residuals against a Frenet spinor integrated on the
/// same grid. Throws ScenarioInvalidError for inconsistent ranges or a
/// missing surface.
ComparisonReport compare_run(const ScenarioConfig& scenario);

}  // namespace spinframes

#endif
