#include "spinframes/spinor.hpp"

#include <algorithm>
#include <cmath>

#include "spinframes/errors.hpp"

namespace spinframes {

namespace {
constexpr double kZeroSpinorGate = 1e-30;
constexpr double kZeroTriadGate = 1e-30;
constexpr double kTriadInputTol = 1e-6;
constexpr double kImagResidueTol = 1e-12;
}  // namespace

double triad_scale(const Triad& t) {
  return (norm(t.a) + norm(t.b) + norm(t.c)) / 3.0;
}

bool is_valid_triad(const Triad& t, double tol) {
  const double na = norm(t.a);
  const double nb = norm(t.b);
  const double nc = norm(t.c);
  const double m = (na + nb + nc) / 3.0;
  if (!(m > 0.0) || !std::isfinite(m)) return false;
  const double dot_tol = tol * m * m;
  if (std::abs(dot(t.a, t.b)) > dot_tol) return false;
  if (std::abs(dot(t.b, t.c)) > dot_tol) return false;
  if (std::abs(dot(t.a, t.c)) > dot_tol) return false;
  const double mag_tol = tol * m;
  if (std::abs(na - nb) > mag_tol) return false;
  if (std::abs(nb - nc) > mag_tol) return false;
  return det3(t.a, t.b, t.c) > 0.0;
}

Triad triad_from_spinor(const Spinor& psi) {
  const double scale = norm_sq(psi);
  if (scale <= kZeroSpinorGate) {
    throw ZeroSpinorError("triad_from_spinor: zero spinor");
  }
  const Vec3C ab = sigma_bilinear(psi, psi);
  const Vec3C c_complex = -sigma_bilinear(mate(psi), psi);
  const Vec3R c_imag = c_complex.imag();
  const double residue =
      std::max({std::abs(c_imag.x), std::abs(c_imag.y), std::abs(c_imag.z)});
  if (residue > kImagResidueTol * scale) {
    throw InternalError("triad_from_spinor: imaginary residue on c exceeds gate");
  }
  return Triad{ab.real(), ab.imag(), c_complex.real()};
}

std::pair<Spinor, Spinor> spinor_from_triad(const Triad& t) {
  if (norm(t.a) <= kZeroTriadGate) {
    throw ZeroTriadError("spinor_from_triad: zero triad");
  }
  if (!is_valid_triad(t, kTriadInputTol)) {
    throw NotOrthonormalError(
        "spinor_from_triad: triad is not orthogonal, equal-magnitude and "
        "right-handed at tolerance 1e-6");
  }

  const Complex m1(t.a.x, t.b.x);
  const Complex m2(t.a.y, t.b.y);
  const Complex m3(t.a.z, t.b.z);
  const Complex i(0.0, 1.0);

  const Complex sq1 = 0.5 * (m1 - i * m2);   // psi1^2
  const Complex sq2 = -0.5 * (m1 + i * m2);  // psi2^2
  const Complex prod = -0.5 * m3;            // psi1 psi2

  Spinor psi;
  if (std::abs(sq1) >= std::abs(sq2)) {
    psi.c1 = std::sqrt(sq1);
    psi.c2 = prod / psi.c1;
  } else {
    psi.c2 = std::sqrt(sq2);
    psi.c1 = prod / psi.c2;
  }
  return {psi, -psi};
}

}  // namespace spinframes
