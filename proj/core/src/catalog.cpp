#include "spinframes/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spinframes/errors.hpp"

namespace spinframes {

namespace {
constexpr double kUnboundedDomain = 1e12;
constexpr double kSpeedGate = 1e-9;
}  // namespace

Curve Curve::from_jet(JetFn jet, Interval domain, bool unit_speed) {
  Curve c;
  c.jet_ = std::make_shared<const JetFn>(std::move(jet));
  c.domain_ = domain;
  c.unit_speed_ = unit_speed;
  return c;
}

Curve Curve::from_positions(PosFn pos, Interval domain, bool unit_speed) {
  Curve c;
  auto shared_pos = std::make_shared<const PosFn>(std::move(pos));
  c.pos_ = shared_pos;
  c.jet_ = std::make_shared<const JetFn>([shared_pos](double s) {
    const PosFn& f = *shared_pos;
    CurveJet jet;
    jet.p = f(s);
    jet.d1 = numeric_derivative(f, s, 1);
    jet.d2 = numeric_derivative(f, s, 2);
    jet.d3 = numeric_derivative(f, s, 3);
    return jet;
  });
  c.domain_ = domain;
  c.unit_speed_ = unit_speed;
  return c;
}

Vec3R Curve::position(double s) const {
  if (pos_) return (*pos_)(s);
  return (*jet_)(s).p;
}

CurveJet Curve::jet(double s) const { return (*jet_)(s); }

Curve Curve::without_analytic_derivatives() const {
  const Curve self = *this;
  return from_positions([self](double s) { return self.position(s); }, domain_,
                        unit_speed_);
}

Curve make_curve(const CurveSpec& spec) {
  switch (spec.kind) {
    case CurveKind::Line: {
      return Curve::from_jet(
          [](double s) {
            return CurveJet{{s, 0.0, 0.0}, {1.0, 0.0, 0.0}, {}, {}};
          },
          {-kUnboundedDomain, kUnboundedDomain}, true);
    }
    case CurveKind::Circle: {
      const double r = spec.r;
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw InvalidSpecError("Circle: radius must be positive");
      }
      return Curve::from_jet(
          [r](double s) {
            const double u = s / r;
            const double c = std::cos(u), sn = std::sin(u);
            return CurveJet{{r * c, r * sn, 0.0},
                            {-sn, c, 0.0},
                            {-c / r, -sn / r, 0.0},
                            {sn / (r * r), -c / (r * r), 0.0}};
          },
          {-kUnboundedDomain, kUnboundedDomain}, true);
    }
    case CurveKind::Helix: {
      const double a = spec.a, b = spec.b;
      if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b) ||
          (a == 0.0 && b == 0.0)) {
        throw InvalidSpecError("Helix: requires a > 0 and (a, b) != (0, 0)");
      }
      const double w = std::hypot(a, b);
      return Curve::from_jet(
          [a, b, w](double s) {
            const double u = s / w;
            const double c = std::cos(u), sn = std::sin(u);
            const double aw = a / w, aw2 = a / (w * w), aw3 = a / (w * w * w);
            return CurveJet{{a * c, a * sn, b * u},
                            {-aw * sn, aw * c, b / w},
                            {-aw2 * c, -aw2 * sn, 0.0},
                            {aw3 * sn, -aw3 * c, 0.0}};
          },
          {-kUnboundedDomain, kUnboundedDomain}, true);
    }
    case CurveKind::SphereLatitude: {
      const double alpha = spec.alpha;
      constexpr double pi = 3.14159265358979323846;
      if (!(alpha > 0.0) || !(alpha < pi)) {
        throw InvalidSpecError("SphereLatitude: alpha must lie in (0, pi)");
      }
      const double rho = std::sin(alpha);
      const double z = std::cos(alpha);
      return Curve::from_jet(
          [rho, z](double s) {
            const double u = s / rho;
            const double c = std::cos(u), sn = std::sin(u);
            return CurveJet{{rho * c, rho * sn, z},
                            {-sn, c, 0.0},
                            {-c / rho, -sn / rho, 0.0},
                            {sn / (rho * rho), -c / (rho * rho), 0.0}};
          },
          {-kUnboundedDomain, kUnboundedDomain}, true);
    }
    case CurveKind::PlanarParametric: {
      const double a = spec.a, b = spec.b;
      if (!(a > 0.0) || !(b > 0.0)) {
        throw InvalidSpecError(
            "PlanarParametric: semi-axes must both be positive");
      }
      constexpr double two_pi = 6.28318530717958647692;
      Curve raw = Curve::from_jet(
          [a, b](double t) {
            const double c = std::cos(t), sn = std::sin(t);
            return CurveJet{{a * c, b * sn, 0.0},
                            {-a * sn, b * c, 0.0},
                            {-a * c, -b * sn, 0.0},
                            {a * sn, -b * c, 0.0}};
          },
          {0.0, two_pi}, false);
      return arc_length_reparameterize(raw, 1e-3);
    }
  }
  throw InvalidSpecError("unknown curve kind");
}

namespace {

// Monotone cubic Hermite table for t(s) with exact slopes dt/ds = 1/speed.
struct InverseArcLength {
  std::vector<double> s;      // strictly increasing arc length
  std::vector<double> t;      // raw parameter
  std::vector<double> slope;  // dt/ds at nodes

  double operator()(double arc) const {
    size_t hi = std::upper_bound(s.begin(), s.end(), arc) - s.begin();
    if (hi == 0) {
      return t.front() + (arc - s.front()) * slope.front();  // extrapolate
    }
    if (hi >= s.size()) {
      return t.back() + (arc - s.back()) * slope.back();
    }
    const size_t lo = hi - 1;
    const double d = s[hi] - s[lo];
    const double x = (arc - s[lo]) / d;
    const double x2 = x * x, x3 = x2 * x;
    const double h00 = 2 * x3 - 3 * x2 + 1;
    const double h10 = x3 - 2 * x2 + x;
    const double h01 = -2 * x3 + 3 * x2;
    const double h11 = x3 - x2;
    return h00 * t[lo] + h10 * d * slope[lo] + h01 * t[hi] +
           h11 * d * slope[hi];
  }
};

}  // namespace

Curve arc_length_reparameterize(const Curve& raw, double grid_step) {
  if (!(grid_step > 0.0)) {
    throw InvalidSpecError("arc_length_reparameterize: grid step must be > 0");
  }
  const Interval dom = raw.domain();
  const double span = dom.hi - dom.lo;
  if (!(span > 0.0) || !std::isfinite(span)) {
    throw InvalidSpecError("arc_length_reparameterize: empty curve domain");
  }
  const std::size_t n =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / grid_step)));
  const double h = span / static_cast<double>(n);

  auto speed = [&raw](double t) { return norm(raw.jet(t).d1); };

  InverseArcLength inv;
  inv.s.resize(n + 1);
  inv.t.resize(n + 1);
  inv.slope.resize(n + 1);

  double v_left = speed(dom.lo);
  if (v_left <= kSpeedGate) {
    throw VanishingSpeedError("arc_length_reparameterize: speed vanishes");
  }
  inv.s[0] = 0.0;
  inv.t[0] = dom.lo;
  inv.slope[0] = 1.0 / v_left;

  for (std::size_t i = 0; i < n; ++i) {
    const double t0 = dom.lo + static_cast<double>(i) * h;
    const double t1 = dom.lo + static_cast<double>(i + 1) * h;
    const double v_mid = speed(0.5 * (t0 + t1));
    const double v_right = speed(t1);
    if (v_mid <= kSpeedGate || v_right <= kSpeedGate) {
      throw VanishingSpeedError("arc_length_reparameterize: speed vanishes");
    }
    inv.s[i + 1] = inv.s[i] + (h / 6.0) * (v_left + 4.0 * v_mid + v_right);
    inv.t[i + 1] = t1;
    inv.slope[i + 1] = 1.0 / v_right;
    v_left = v_right;
  }

  const double total = inv.s.back();
  auto table = std::make_shared<const InverseArcLength>(std::move(inv));
  const Curve base = raw;
  return Curve::from_positions(
      [table, base](double s) { return base.position((*table)(s)); },
      {0.0, total}, true);
}

Surface::Surface(SurfaceSpec spec) : spec_(spec) {
  sign_ = spec.orientation == SurfaceOrientation::Outward ? 1.0 : -1.0;
}

double Surface::value(const Vec3R& p) const {
  switch (spec_.kind) {
    case SurfaceKind::Plane:
      return p.z;
    case SurfaceKind::Sphere:
      return dot(p, p) - spec_.radius * spec_.radius;
    case SurfaceKind::Cylinder:
      return p.x * p.x + p.y * p.y - spec_.radius * spec_.radius;
  }
  return 0.0;
}

Vec3R Surface::gradient(const Vec3R& p) const {
  switch (spec_.kind) {
    case SurfaceKind::Plane:
      return {0.0, 0.0, 1.0};
    case SurfaceKind::Sphere:
      return 2.0 * p;
    case SurfaceKind::Cylinder:
      return {2.0 * p.x, 2.0 * p.y, 0.0};
  }
  return {};
}

Vec3R Surface::gradient_derivative(const Vec3R&, const Vec3R& v) const {
  switch (spec_.kind) {
    case SurfaceKind::Plane:
      return {};
    case SurfaceKind::Sphere:
      return 2.0 * v;
    case SurfaceKind::Cylinder:
      return {2.0 * v.x, 2.0 * v.y, 0.0};
  }
  return {};
}

Vec3R Surface::unit_normal(const Vec3R& p) const {
  const Vec3R u = sign_ * gradient(p);
  const double m = norm(u);
  if (m <= 1e-9) {
    throw DegenerateNormalError("surface normal magnitude below 1e-9");
  }
  return u / m;
}

Vec3R Surface::unit_normal_derivative(const Vec3R& p, const Vec3R& v) const {
  const Vec3R u = sign_ * gradient(p);
  const double m = norm(u);
  if (m <= 1e-9) {
    throw DegenerateNormalError("surface normal magnitude below 1e-9");
  }
  const Vec3R n = u / m;
  const Vec3R du = sign_ * gradient_derivative(p, v);
  return (du - dot(n, du) * n) / m;
}

Surface make_surface(const SurfaceSpec& spec) {
  if (spec.kind != SurfaceKind::Plane &&
      (!(spec.radius > 0.0) || !std::isfinite(spec.radius))) {
    throw InvalidSpecError("surface radius must be positive");
  }
  return Surface(spec);
}

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Line:
      return "Line";
    case CurveKind::Circle:
      return "Circle";
    case CurveKind::Helix:
      return "Helix";
    case CurveKind::SphereLatitude:
      return "SphereLatitude";
    case CurveKind::PlanarParametric:
      return "PlanarParametric";
  }
  return "?";
}

std::string to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Plane:
      return "Plane";
    case SurfaceKind::Sphere:
      return "Sphere";
    case SurfaceKind::Cylinder:
      return "Cylinder";
  }
  return "?";
}

}  // namespace spinframes
