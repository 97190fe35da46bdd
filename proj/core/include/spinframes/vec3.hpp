#ifndef SPINFRAMES_VEC3_HPP
#define SPINFRAMES_VEC3_HPP

#include <cmath>
#include <complex>

namespace spinframes {

using Complex = std::complex<double>;

/// Real 3-vector.
struct Vec3R {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

constexpr Vec3R operator+(const Vec3R& a, const Vec3R& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Vec3R operator-(const Vec3R& a, const Vec3R& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Vec3R operator-(const Vec3R& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3R operator*(double s, const Vec3R& a) {
  return {s * a.x, s * a.y, s * a.z};
}
constexpr Vec3R operator*(const Vec3R& a, double s) { return s * a; }
constexpr Vec3R operator/(const Vec3R& a, double s) {
  return {a.x / s, a.y / s, a.z / s};
}

constexpr double dot(const Vec3R& a, const Vec3R& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3R cross(const Vec3R& a, const Vec3R& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3R& a) { return std::sqrt(dot(a, a)); }
constexpr double norm_sq(const Vec3R& a) { return dot(a, a); }
inline Vec3R normalized(const Vec3R& a) { return a / norm(a); }
inline double distance(const Vec3R& a, const Vec3R& b) { return norm(a - b); }

/// Scalar triple product <a x b, c>.
constexpr double det3(const Vec3R& a, const Vec3R& b, const Vec3R& c) {
  return dot(cross(a, b), c);
}

inline bool is_finite(const Vec3R& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Complex 3-vector.
struct Vec3C {
  Complex x{};
  Complex y{};
  Complex z{};

  Vec3R real() const { return {x.real(), y.real(), z.real()}; }
  Vec3R imag() const { return {x.imag(), y.imag(), z.imag()}; }
};

inline Vec3C operator+(const Vec3C& a, const Vec3C& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3C operator-(const Vec3C& a, const Vec3C& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3C operator-(const Vec3C& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3C operator*(const Complex& s, const Vec3C& a) {
  return {s * a.x, s * a.y, s * a.z};
}
inline Vec3C conj(const Vec3C& a) {
  return {std::conj(a.x), std::conj(a.y), std::conj(a.z)};
}

/// Unconjugated complex dot product; vanishes on isotropic vectors.
inline Complex dot_bilinear(const Vec3C& a, const Vec3C& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Euclidean (Hermitian) norm.
inline double norm(const Vec3C& a) {
  return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

inline bool is_finite(const Vec3C& a) {
  return std::isfinite(a.x.real()) && std::isfinite(a.x.imag()) &&
         std::isfinite(a.y.real()) && std::isfinite(a.y.imag()) &&
         std::isfinite(a.z.real()) && std::isfinite(a.z.imag());
}

}  // namespace spinframes

#endif
