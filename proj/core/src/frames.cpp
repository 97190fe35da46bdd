#include "spinframes/frames.hpp"

#include <cmath>

#include "spinframes/errors.hpp"

namespace spinframes {

namespace {
constexpr double kCurvatureGate = 1e-9;
constexpr double kResidualGate = 1e-8;
constexpr double kTangentGate = 1e-9;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

FrenetApparatus frenet_apparatus(const Curve& curve, double s) {
  const CurveJet jet = curve.jet(s);
  FrenetApparatus f;
  f.s = s;
  f.T = jet.d1;
  f.kappa = norm(jet.d2);
  if (f.kappa <= kCurvatureGate) {
    throw CurvatureVanishesError(
        "frenet_apparatus: curvature vanishes, normal undefined");
  }
  f.N = jet.d2 / f.kappa;
  f.B = cross(f.T, f.N);
  f.tau = dot(jet.d3, f.B) / f.kappa;
  return f;
}

DarbouxApparatus darboux_apparatus(const Surface& surface, const Curve& curve,
                                   double s) {
  const CurveJet jet = curve.jet(s);
  if (std::abs(surface.value(jet.p)) > kResidualGate) {
    throw OffSurfaceError("darboux_apparatus: curve point is off the surface");
  }
  DarbouxApparatus d;
  d.s = s;
  d.T = jet.d1;
  d.n = surface.unit_normal(jet.p);
  d.g = cross(d.n, d.T);
  d.kappa_g = dot(jet.d2, d.g);
  d.kappa_n = dot(jet.d2, d.n);
  const Vec3R n_prime = surface.unit_normal_derivative(jet.p, jet.d1);
  const Vec3R g_prime = cross(n_prime, d.T) + cross(d.n, jet.d2);
  d.tau_g = dot(g_prime, d.n);
  return d;
}

FramePhase frame_phase(const FrenetApparatus& f, const DarbouxApparatus& d) {
  if (std::abs(dot(f.T, d.T) - 1.0) > kTangentGate) {
    throw TangentMismatchError("frame_phase: apparatus tangents disagree");
  }
  return FramePhase{std::atan2(dot(d.g, f.B), dot(d.g, f.N))};
}

std::pair<Vec3R, Vec3R> rotate_frenet_to_darboux(const FrenetApparatus& f,
                                                 FramePhase theta) {
  const double c = std::cos(theta.theta);
  const double sn = std::sin(theta.theta);
  return {c * f.N + sn * f.B, -sn * f.N + c * f.B};
}

double unwrap_angle(double prev, double raw) {
  return raw + kTwoPi * std::round((prev - raw) / kTwoPi);
}

}  // namespace spinframes
