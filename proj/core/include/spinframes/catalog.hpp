#ifndef SPINFRAMES_CATALOG_HPP
#define SPINFRAMES_CATALOG_HPP

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "spinframes/vec3.hpp"

namespace spinframes {

// ---------------------------------------------------------------------------
// Numeric differentiation
// ---------------------------------------------------------------------------

namespace detail {
template <class F>
using deriv_result_t = std::decay_t<decltype(std::declval<F&>()(0.0))>;
}

/// Default stencil steps: 1e-4 for orders 1-2 (5-point), 1e-3 for order 3
/// (7-point); chosen to balance truncation against rounding.
inline double default_derivative_step(int order) {
  return order == 3 ? 1e-3 : 1e-4;
}

/// Central finite difference of a scalar- or vector-valued function.
/// order 1, 2: 5-point stencil; order 3: 7-point stencil. f must be evaluable
/// on [s - 3h, s + 3h].
template <class F>
detail::deriv_result_t<F> numeric_derivative(F&& f, double s, int order,
                                             double h) {
  switch (order) {
    case 1:
      return (1.0 / (12.0 * h)) *
             (f(s - 2 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2 * h));
    case 2:
      return (1.0 / (12.0 * h * h)) *
             (-f(s - 2 * h) + 16.0 * f(s - h) - 30.0 * f(s) + 16.0 * f(s + h) -
              f(s + 2 * h));
    case 3:
      return (1.0 / (8.0 * h * h * h)) *
             (-f(s - 3 * h) + 8.0 * f(s - 2 * h) - 13.0 * f(s - h) +
              13.0 * f(s + h) - 8.0 * f(s + 2 * h) + f(s + 3 * h));
    default:
      throw std::invalid_argument("numeric_derivative: order must be 1, 2 or 3");
  }
}

template <class F>
detail::deriv_result_t<F> numeric_derivative(F&& f, double s, int order) {
  return numeric_derivative(std::forward<F>(f), s, order,
                            default_derivative_step(order));
}

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

enum class CurveKind { Line, Circle, Helix, SphereLatitude, PlanarParametric };

/// Parameters of a catalog curve. Circle: radius r. Helix: radius a, pitch
/// parameter b (unit-speed with w = sqrt(a^2 + b^2)). SphereLatitude: latitude
/// circle at colatitude alpha on the unit sphere. PlanarParametric: the planar
/// parametric curve (a cos t, b sin t, 0), handled through sampling-based
/// arc-length reparameterization and numeric derivatives.
struct CurveSpec {
  CurveKind kind = CurveKind::Line;
  double r = 0.0;
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;

  static CurveSpec line() { return {CurveKind::Line, 0, 0, 0, 0}; }
  static CurveSpec circle(double r) { return {CurveKind::Circle, r, 0, 0, 0}; }
  static CurveSpec helix(double a, double b) {
    return {CurveKind::Helix, 0, a, b, 0};
  }
  static CurveSpec sphere_latitude(double alpha) {
    return {CurveKind::SphereLatitude, 0, 0, 0, alpha};
  }
  static CurveSpec planar_parametric(double a, double b) {
    return {CurveKind::PlanarParametric, 0, a, b, 0};
  }
};

/// Position and first three derivatives of a curve at one parameter value.
struct CurveJet {
  Vec3R p;
  Vec3R d1;
  Vec3R d2;
  Vec3R d3;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A parametric space curve exposing derivatives up to order 3. Immutable
/// after construction; cheap to copy (shared evaluator).
class Curve {
 public:
  using JetFn = std::function<CurveJet(double)>;
  using PosFn = std::function<Vec3R(double)>;

  /// Curve with analytic jets.
  static Curve from_jet(JetFn jet, Interval domain, bool unit_speed);

  /// Curve defined by position only; derivatives come from central stencils.
  static Curve from_positions(PosFn pos, Interval domain, bool unit_speed);

  Vec3R position(double s) const;
  CurveJet jet(double s) const;

  /// Same trace, but with every derivative taken by finite differences of the
  /// position. Used to exercise the numeric-derivative path on curves that
  /// have analytic jets.
  Curve without_analytic_derivatives() const;

  bool unit_speed() const { return unit_speed_; }
  const Interval& domain() const { return domain_; }

 private:
  Curve() = default;
  std::shared_ptr<const JetFn> jet_;
  std::shared_ptr<const PosFn> pos_;
  Interval domain_;
  bool unit_speed_ = false;
};

/// Builds the unit-speed catalog curve for a spec.
/// Throws InvalidSpecError when the spec parameters are out of range.
Curve make_curve(const CurveSpec& spec);

/// Reparameterizes a regular curve by arc length: s(t) by composite Simpson
/// quadrature on a grid of the given step, inverted by monotone cubic Hermite
/// interpolation. The result is flagged unit-speed with |alpha'(s)| = 1 within
/// 1e-6. Throws VanishingSpeedError when the raw speed drops below 1e-9
/// anywhere on the quadrature grid.
Curve arc_length_reparameterize(const Curve& raw, double grid_step);

// ---------------------------------------------------------------------------
// Surfaces
// ---------------------------------------------------------------------------

enum class SurfaceKind { Plane, Sphere, Cylinder };
enum class SurfaceOrientation { Outward, Inward };

/// Plane: z = 0 with upward (Outward) normal. Sphere: |p| = radius about the
/// origin. Cylinder: x^2 + y^2 = radius^2 about the z-axis.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::Plane;
  double radius = 0.0;
  SurfaceOrientation orientation = SurfaceOrientation::Outward;

  static SurfaceSpec plane(
      SurfaceOrientation o = SurfaceOrientation::Outward) {
    return {SurfaceKind::Plane, 0.0, o};
  }
  static SurfaceSpec sphere(double radius,
                            SurfaceOrientation o = SurfaceOrientation::Outward) {
    return {SurfaceKind::Sphere, radius, o};
  }
  static SurfaceSpec cylinder(
      double radius, SurfaceOrientation o = SurfaceOrientation::Outward) {
    return {SurfaceKind::Cylinder, radius, o};
  }
};

/// Implicit oriented surface F(p) = 0. Normals come from the gradient, so
/// there are no chart boundaries to avoid on spheres and cylinders.
class Surface {
 public:
  explicit Surface(SurfaceSpec spec);

  double value(const Vec3R& p) const;
  Vec3R gradient(const Vec3R& p) const;
  /// Directional derivative of the gradient: H(p) v.
  Vec3R gradient_derivative(const Vec3R& p, const Vec3R& v) const;

  /// Oriented unit normal. Throws DegenerateNormalError when |grad F| <= 1e-9.
  Vec3R unit_normal(const Vec3R& p) const;

  /// Derivative of the oriented unit normal along a velocity v at p.
  Vec3R unit_normal_derivative(const Vec3R& p, const Vec3R& v) const;

  const SurfaceSpec& spec() const { return spec_; }

 private:
  SurfaceSpec spec_;
  double sign_ = 1.0;
};

/// Throws InvalidSpecError when the spec parameters are out of range.
Surface make_surface(const SurfaceSpec& spec);

std::string to_string(CurveKind k);
std::string to_string(SurfaceKind k);

}  // namespace spinframes

#endif
