#ifndef SPINFRAMES_FRAMES_HPP
#define SPINFRAMES_FRAMES_HPP

#include <utility>

#include "spinframes/catalog.hpp"
#include "spinframes/vec3.hpp"

namespace spinframes {

/// Frenet apparatus {T, N, B, kappa, tau} of a unit-speed curve at arc length s.
/// {N, B, T} is an orthonormal right-handed triad.
struct FrenetApparatus {
  double s = 0.0;
  Vec3R T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Darboux apparatus {T, g, n, kappa_g, kappa_n, tau_g} of a unit-speed curve
/// on an oriented surface at arc length s, with g = n x T.
struct DarbouxApparatus {
  double s = 0.0;
  Vec3R T, g, n;
  double kappa_g = 0.0;
  double kappa_n = 0.0;
  double tau_g = 0.0;
};

/// Angle rotating {N, B} into {g, n} about the shared tangent, in (-pi, pi].
struct FramePhase {
  double theta = 0.0;
};

/// T = alpha', kappa = |alpha''|, N = alpha''/kappa, B = T x N,
/// tau = <alpha''', B>/kappa. Throws CurvatureVanishesError when
/// |alpha''| <= 1e-9 (N and B undefined there).
FrenetApparatus frenet_apparatus(const Curve& curve, double s);

/// n is the oriented surface normal at alpha(s), g = n x T,
/// kappa_g = <T', g>, kappa_n = <T', n>, tau_g = <g', n>.
/// Throws OffSurfaceError when |F(alpha(s))| > 1e-8 and DegenerateNormalError
/// via the surface normal gate.
DarbouxApparatus darboux_apparatus(const Surface& surface, const Curve& curve,
                                   double s);

/// theta = atan2(<g, B>, <g, N>), so that g = cos(theta) N + sin(theta) B and
/// n = -sin(theta) N + cos(theta) B. Throws TangentMismatchError when the two
/// apparatuses do not share their tangent (|<f.T, d.T> - 1| > 1e-9).
FramePhase frame_phase(const FrenetApparatus& f, const DarbouxApparatus& d);

/// Rotates the Frenet normal plane by theta about T:
/// returns (g, n) = (cos N + sin B, -sin N + cos B).
std::pair<Vec3R, Vec3R> rotate_frenet_to_darboux(const FrenetApparatus& f,
                                                 FramePhase theta);

/// Shifts raw by the multiple of 2*pi that brings it closest to prev.
/// Applied along trajectories before any phase differencing.
double unwrap_angle(double prev, double raw);

}  // namespace spinframes

#endif
