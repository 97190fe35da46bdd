#include "spinframes/verification.hpp"

#include <algorithm>
#include <cmath>

#include "spinframes/errors.hpp"
#include "spinframes/format.hpp"

namespace spinframes {

double frame_distance(const Triad& t1, const Triad& t2) {
  return std::max({distance(t1.a, t2.a), distance(t1.b, t2.b),
                   distance(t1.c, t2.c)});
}

Spinor canonical_spinor(const std::pair<Spinor, Spinor>& pair) {
  const Spinor& psi = pair.first;
  const double keys[4] = {psi.c1.real(), psi.c1.imag(), psi.c2.real(),
                          psi.c2.imag()};
  for (double k : keys) {
    if (k > 0.0) return pair.first;
    if (k < 0.0) return pair.second;
  }
  return pair.first;
}

namespace {

double spinor_distance(const Spinor& a, const Spinor& b) {
  return std::sqrt(norm_sq(a - b));
}

SystemKind lifted_kind(SystemKind k) {
  switch (k) {
    case SystemKind::FrenetVector:
      return SystemKind::FrenetSpinor;
    case SystemKind::DarbouxVector:
      return SystemKind::DarbouxSpinor;
    default:
      return k;
  }
}

}  // namespace

Trajectory<Spinor> spinor_lift(const Trajectory<FrameState>& frames) {
  Trajectory<Spinor> out;
  out.grid = frames.grid;
  out.kind = lifted_kind(frames.kind);
  out.step = frames.step;
  out.renormalized = frames.renormalized;
  out.states.reserve(frames.states.size());

  for (std::size_t k = 0; k < frames.states.size(); ++k) {
    const auto pair = spinor_from_triad(as_triad(frames.states[k]));
    if (k == 0) {
      out.states.push_back(canonical_spinor(pair));
    } else {
      const Spinor& prev = out.states.back();
      out.states.push_back(spinor_distance(pair.first, prev) <=
                                   spinor_distance(pair.second, prev)
                               ? pair.first
                               : pair.second);
    }
  }
  return out;
}

Theorem2Residual theorem2_residual(const Spinor& psi, const Spinor& phi,
                                   FramePhase theta) {
  const Complex phase = std::polar(1.0, theta.theta);
  const Vec3C lhs = sigma_bilinear(psi, psi);
  const Vec3C rhs = phase * sigma_bilinear(phi, phi);
  const Vec3C t_psi = -sigma_bilinear(mate(psi), psi);
  const Vec3C t_phi = -sigma_bilinear(mate(phi), phi);
  Theorem2Residual r;
  r.residual = norm(lhs - rhs);
  r.tangent_gap = norm(t_psi - t_phi);
  return r;
}

ComparisonSummary summarize(const std::vector<ComparisonSample>& samples) {
  ComparisonSummary sum;
  if (samples.empty()) return sum;
  double acc_vv = 0.0, acc_an = 0.0, acc_nd = 0.0, acc_t2 = 0.0;
  std::size_t n_t2 = 0;
  for (const auto& r : samples) {
    sum.max_err_spinor_vs_vector =
        std::max(sum.max_err_spinor_vs_vector, r.err_spinor_vs_vector);
    sum.max_err_vs_analytic = std::max(sum.max_err_vs_analytic, r.err_vs_analytic);
    sum.max_norm_drift = std::max(sum.max_norm_drift, r.norm_drift);
    acc_vv += r.err_spinor_vs_vector;
    acc_an += r.err_vs_analytic;
    acc_nd += r.norm_drift;
    if (r.theorem2) {
      ++n_t2;
      acc_t2 += *r.theorem2;
      sum.max_theorem2 = std::max(sum.max_theorem2.value_or(0.0), *r.theorem2);
    }
    if (r.tangent_gap) {
      sum.max_tangent_gap =
          std::max(sum.max_tangent_gap.value_or(0.0), *r.tangent_gap);
    }
  }
  const double n = static_cast<double>(samples.size());
  sum.mean_err_spinor_vs_vector = acc_vv / n;
  sum.mean_err_vs_analytic = acc_an / n;
  sum.mean_norm_drift = acc_nd / n;
  if (n_t2 > 0) sum.mean_theorem2 = acc_t2 / static_cast<double>(n_t2);
  return sum;
}

namespace {

std::string curve_label(const CurveSpec& spec) {
  switch (spec.kind) {
    case CurveKind::Line:
      return "Line";
    case CurveKind::Circle:
      return "Circle(" + format_double(spec.r) + ")";
    case CurveKind::Helix:
      return "Helix(" + format_double(spec.a) + ", " + format_double(spec.b) +
             ")";
    case CurveKind::SphereLatitude:
      return "SphereLatitude(" + format_double(spec.alpha) + ")";
    case CurveKind::PlanarParametric:
      return "PlanarParametric(" + format_double(spec.a) + ", " +
             format_double(spec.b) + ")";
  }
  return "?";
}

std::string surface_label(const SurfaceSpec& spec) {
  std::string base = to_string(spec.kind);
  if (spec.kind != SurfaceKind::Plane) {
    base += "(" + format_double(spec.radius) + ")";
  }
  if (spec.orientation == SurfaceOrientation::Inward) base += " inward";
  return base;
}

void validate_scenario(const ScenarioConfig& sc) {
  if (!(sc.s1 > sc.s0)) {
    throw ScenarioInvalidError("scenario '" + sc.name +
                               "': requires s1 > s0");
  }
  if (!(sc.step > 0.0) || sc.step > (sc.s1 - sc.s0)) {
    throw ScenarioInvalidError("scenario '" + sc.name +
                               "': requires 0 < step <= s1 - s0");
  }
}

FrameFamily family_of(const ScenarioConfig& sc) {
  switch (sc.mode) {
    case RunMode::Frenet:
      return FrameFamily::Frenet;
    case RunMode::Darboux:
    case RunMode::Theorem2:
      if (!sc.surface) {
        throw ScenarioInvalidError("scenario '" + sc.name +
                                   "': mode requires a surface");
      }
      return FrameFamily::Darboux;
    case RunMode::Compare:
      return sc.surface ? FrameFamily::Darboux : FrameFamily::Frenet;
  }
  throw ScenarioInvalidError("scenario '" + sc.name + "': unknown mode");
}

ComparisonReport frenet_compare(const ScenarioConfig& sc, const Curve& curve) {
  ComparisonReport rep;
  const CurvatureSignalFrenet sig = frenet_signal(curve);
  const FrenetApparatus f0 = frenet_apparatus(curve, sc.s0);
  const FrameState st0{f0.T, f0.N, f0.B};
  const IntegrateOptions opts{sc.renormalize};

  const auto vec = rk4_integrate(frenet_vector_system(sig), st0, sc.s0, sc.s1,
                                 sc.step, SystemKind::FrenetVector, opts);
  const Spinor psi0 = canonical_spinor(spinor_from_triad(as_triad(st0)));
  const auto spin = rk4_integrate(frenet_spinor_system(sig), psi0, sc.s0,
                                  sc.s1, sc.step, SystemKind::FrenetSpinor,
                                  opts);
  const double n0 = norm_sq(psi0);

  rep.samples.reserve(vec.size());
  for (std::size_t k = 0; k < vec.size(); ++k) {
    const double s = vec.grid[k];
    ComparisonSample r;
    r.s = s;
    r.frame = vec.states[k];
    const Triad tri_spin = triad_from_spinor(spin.states[k]);
    const Triad tri_vec = as_triad(vec.states[k]);
    const FrenetApparatus fa = frenet_apparatus(curve, s);
    const Triad tri_ana{fa.N, fa.B, fa.T};
    r.curvature = {fa.kappa, fa.tau, std::nullopt};
    r.err_spinor_vs_vector = frame_distance(tri_spin, tri_vec);
    r.err_vs_analytic = std::max(frame_distance(tri_spin, tri_ana),
                                 frame_distance(tri_vec, tri_ana));
    r.norm_drift = std::abs(norm_sq(spin.states[k]) - n0);
    rep.samples.push_back(std::move(r));
  }
  return rep;
}

ComparisonReport darboux_compare(const ScenarioConfig& sc, const Curve& curve) {
  ComparisonReport rep;
  const Surface surface = make_surface(*sc.surface);
  const CurvatureSignalDarboux sig = darboux_signal(surface, curve);
  const DarbouxApparatus d0 = darboux_apparatus(surface, curve, sc.s0);
  const FrameState st0{d0.T, d0.g, d0.n};
  const IntegrateOptions opts{sc.renormalize};

  const auto vec = rk4_integrate(darboux_vector_system(sig), st0, sc.s0, sc.s1,
                                 sc.step, SystemKind::DarbouxVector, opts);
  const Spinor phi0 = canonical_spinor(spinor_from_triad(as_triad(st0)));
  const auto spin = rk4_integrate(darboux_spinor_system(sig), phi0, sc.s0,
                                  sc.s1, sc.step, SystemKind::DarbouxSpinor,
                                  opts);
  const double n0 = norm_sq(phi0);

  // Frenet quantities along the same grid feed the phase relation; they exist
  // only while kappa > 0.
  bool with_frenet = true;
  Trajectory<Spinor> psi_traj;
  try {
    const CurvatureSignalFrenet fsig = frenet_signal(curve);
    const FrenetApparatus f0 = frenet_apparatus(curve, sc.s0);
    const Spinor psi0 =
        canonical_spinor(spinor_from_triad(Triad{f0.N, f0.B, f0.T}));
    psi_traj = rk4_integrate(frenet_spinor_system(fsig), psi0, sc.s0, sc.s1,
                             sc.step, SystemKind::FrenetSpinor, opts);
  } catch (const CurvatureVanishesError&) {
    with_frenet = false;
  }

  double prev_theta = 0.0;
  rep.samples.reserve(vec.size());
  for (std::size_t k = 0; k < vec.size(); ++k) {
    const double s = vec.grid[k];
    ComparisonSample r;
    r.s = s;
    r.frame = vec.states[k];
    const Triad tri_spin = triad_from_spinor(spin.states[k]);
    const Triad tri_vec = as_triad(vec.states[k]);
    const DarbouxApparatus da = darboux_apparatus(surface, curve, s);
    const Triad tri_ana{da.g, da.n, da.T};
    r.curvature = {da.kappa_g, da.kappa_n, da.tau_g};
    r.err_spinor_vs_vector = frame_distance(tri_spin, tri_vec);
    r.err_vs_analytic = std::max(frame_distance(tri_spin, tri_ana),
                                 frame_distance(tri_vec, tri_ana));
    r.norm_drift = std::abs(norm_sq(spin.states[k]) - n0);

    if (with_frenet) {
      try {
        const FrenetApparatus fa = frenet_apparatus(curve, s);
        double theta = frame_phase(fa, da).theta;
        if (k > 0) theta = unwrap_angle(prev_theta, theta);
        prev_theta = theta;
        r.theta = theta;
        const Theorem2Residual t2 =
            theorem2_residual(psi_traj.states[k], spin.states[k],
                              FramePhase{theta});
        r.theorem2 = t2.residual;
        r.tangent_gap = t2.tangent_gap;
      } catch (const CurvatureVanishesError&) {
        // Frenet frame undefined at this sample; phase columns stay empty.
      }
    }
    rep.samples.push_back(std::move(r));
  }
  return rep;
}

}  // namespace

ComparisonReport compare_run(const ScenarioConfig& sc) {
  validate_scenario(sc);
  const FrameFamily family = family_of(sc);
  const Curve curve = make_curve(sc.curve);

  ComparisonReport rep = family == FrameFamily::Frenet
                             ? frenet_compare(sc, curve)
                             : darboux_compare(sc, curve);
  rep.scenario = sc.name;
  rep.family = family;
  rep.curve_label = curve_label(sc.curve);
  rep.surface_label = sc.surface ? surface_label(*sc.surface) : "";
  rep.s0 = sc.s0;
  rep.s1 = sc.s1;
  rep.step = sc.step;
  rep.renormalized = sc.renormalize;
  rep.summary = summarize(rep.samples);
  return rep;
}

}  // namespace spinframes
