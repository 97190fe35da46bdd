#ifndef SPINFRAMES_EVOLUTION_HPP
#define SPINFRAMES_EVOLUTION_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "spinframes/catalog.hpp"
#include "spinframes/errors.hpp"
#include "spinframes/frames.hpp"
#include "spinframes/spinor.hpp"
#include "spinframes/vec3.hpp"

namespace spinframes {

/// Curvature and torsion of a unit-speed curve as functions of arc length.
struct CurvatureSignalFrenet {
  std::function<double(double)> kappa;
  std::function<double(double)> tau;
};

/// Geodesic curvature, normal curvature and geodesic torsion as functions of
/// arc length.
struct CurvatureSignalDarboux {
  std::function<double(double)> kappa_g;
  std::function<double(double)> kappa_n;
  std::function<double(double)> tau_g;
};

/// Moving-frame state: rows (T, e1, e2) with (e1, e2) = (N, B) for Frenet
/// transport and (g, n) for Darboux transport.
struct FrameState {
  Vec3R T, e1, e2;
};

inline FrameState operator+(const FrameState& a, const FrameState& b) {
  return {a.T + b.T, a.e1 + b.e1, a.e2 + b.e2};
}
inline FrameState operator*(double s, const FrameState& a) {
  return {s * a.T, s * a.e1, s * a.e2};
}

inline bool is_finite(const FrameState& a) {
  return is_finite(a.T) && is_finite(a.e1) && is_finite(a.e2);
}

/// dT = kappa N, dN = -kappa T + tau B, dB = -tau N.
inline FrameState frenet_vector_rhs(const FrameState& st, double kappa,
                                    double tau) {
  return {kappa * st.e1, -kappa * st.T + tau * st.e2, -tau * st.e1};
}

/// dT = kappa_g g + kappa_n n, dg = -kappa_g T + tau_g n,
/// dn = -kappa_n T - tau_g g.
inline FrameState darboux_vector_rhs(const FrameState& st, double kg, double kn,
                                     double tg) {
  return {kg * st.e1 + kn * st.e2, -kg * st.T + tg * st.e2,
          -kn * st.T - tg * st.e1};
}

/// Spinor Frenet equation: dpsi = (1/2)(-i tau psi + kappa mate(psi)).
inline Spinor frenet_spinor_rhs(const Spinor& psi, double kappa, double tau) {
  return 0.5 * (Complex(0.0, -tau) * psi + kappa * mate(psi));
}

/// Spinor Darboux equation:
/// dphi = (-i tau_g / 2) phi + ((i kappa_n + kappa_g)/2) mate(phi).
inline Spinor darboux_spinor_rhs(const Spinor& phi, double kg, double kn,
                                 double tg) {
  return Complex(0.0, -0.5 * tg) * phi + (0.5 * Complex(kg, kn)) * mate(phi);
}

enum class SystemKind : std::uint8_t {
  FrenetVector,
  FrenetSpinor,
  DarbouxVector,
  DarbouxSpinor,
};

/// Integration output on a uniform, inclusive arc-length grid.
template <class State>
struct Trajectory {
  std::vector<double> grid;
  std::vector<State> states;
  SystemKind kind = SystemKind::FrenetVector;
  double step = 0.0;
  bool renormalized = false;

  std::size_t size() const { return grid.size(); }
};

struct IntegrateOptions {
  bool renormalize = false;
};

/// Rescales a spinor state to unit norm.
inline void renormalize_state(Spinor& psi) {
  psi = (1.0 / std::sqrt(norm_sq(psi))) * psi;
}

/// Cross-product repair of a drifting frame: e2 <- T x e1, e1 <- e2 x T,
/// all rows normalized.
inline void renormalize_state(FrameState& st) {
  st.e2 = cross(st.T, st.e1);
  st.e1 = cross(st.e2, st.T);
  st.T = normalized(st.T);
  st.e1 = normalized(st.e1);
  st.e2 = normalized(st.e2);
}

namespace detail {

inline std::size_t grid_steps(double s0, double s1, double step) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(s0) ||
      !std::isfinite(s1) || !(s1 > s0)) {
    throw BadGridError("rk4_integrate: need finite s1 > s0 and step > 0");
  }
  const double ratio = (s1 - s0) / step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-6 || rounded < 1.0) {
    throw BadGridError(
        "rk4_integrate: (s1 - s0)/step must be a positive integer within "
        "1e-6");
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace detail

/// Classical fixed-step RK4 over [s0, s1]. The grid is uniform and includes
/// both endpoints; curvature signals are evaluated at the substage abscissae
/// s, s + h/2, s + h of every step. Throws BadGridError when (s1 - s0)/step
/// is not an integer within 1e-6 and NonFiniteStateError when a state stops
/// being finite.
template <class State, class Rhs>
Trajectory<State> rk4_integrate(Rhs&& rhs, State y0, double s0, double s1,
                                double step, SystemKind kind,
                                IntegrateOptions opts = {}) {
  const std::size_t n = detail::grid_steps(s0, s1, step);

  Trajectory<State> out;
  out.kind = kind;
  out.step = step;
  out.renormalized = opts.renormalize;
  out.grid.reserve(n + 1);
  out.states.reserve(n + 1);
  out.grid.push_back(s0);
  out.states.push_back(y0);

  State y = y0;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = s0 + static_cast<double>(k) * step;
    const double h = step;
    const State k1 = rhs(y, s);
    const State k2 = rhs(y + (h / 2.0) * k1, s + h / 2.0);
    const State k3 = rhs(y + (h / 2.0) * k2, s + h / 2.0);
    const State k4 = rhs(y + h * k3, s + h);
    y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!is_finite(y)) {
      throw NonFiniteStateError("rk4_integrate: state became non-finite");
    }
    if (opts.renormalize) {
      renormalize_state(y);
    }
    out.grid.push_back(k + 1 == n ? s1 : s0 + static_cast<double>(k + 1) * step);
    out.states.push_back(y);
  }
  return out;
}

// System factories binding a right-hand side to its curvature signal.

inline auto frenet_vector_system(CurvatureSignalFrenet sig) {
  return [sig = std::move(sig)](const FrameState& st, double s) {
    return frenet_vector_rhs(st, sig.kappa(s), sig.tau(s));
  };
}

inline auto frenet_spinor_system(CurvatureSignalFrenet sig) {
  return [sig = std::move(sig)](const Spinor& psi, double s) {
    return frenet_spinor_rhs(psi, sig.kappa(s), sig.tau(s));
  };
}

inline auto darboux_vector_system(CurvatureSignalDarboux sig) {
  return [sig = std::move(sig)](const FrameState& st, double s) {
    return darboux_vector_rhs(st, sig.kappa_g(s), sig.kappa_n(s), sig.tau_g(s));
  };
}

inline auto darboux_spinor_system(CurvatureSignalDarboux sig) {
  return [sig = std::move(sig)](const Spinor& phi, double s) {
    return darboux_spinor_rhs(phi, sig.kappa_g(s), sig.kappa_n(s),
                              sig.tau_g(s));
  };
}

/// Samples kappa and tau analytically from the catalog curve.
CurvatureSignalFrenet frenet_signal(const Curve& curve);

/// Samples kappa_g, kappa_n, tau_g analytically from the catalog pairing.
CurvatureSignalDarboux darboux_signal(const Surface& surface,
                                      const Curve& curve);

}  // namespace spinframes

#endif
