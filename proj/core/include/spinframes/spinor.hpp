#ifndef SPINFRAMES_SPINOR_HPP
#define SPINFRAMES_SPINOR_HPP

#include <utility>

#include "spinframes/vec3.hpp"

namespace spinframes {

/// Two-component complex spinor. A unit spinor encodes an ordered orthonormal
/// right-handed triad {a, b, c} of 3-vectors through the quadratic forms
///
///   a + ib = psi^t sigma psi,   c = -mate(psi)^t sigma psi,
///
/// where sigma is Cartan's triple of symmetric 2x2 matrices
///   sigma_1 = [[1,0],[0,-1]], sigma_2 = [[i,0],[0,i]], sigma_3 = [[0,-1],[-1,0]]
/// (the symmetric convention, not the Hermitian Pauli one). psi and -psi encode
/// the same triad; the correspondence is two-to-one.
struct Spinor {
  Complex c1{};  // first component
  Complex c2{};  // second component
};

inline Spinor operator+(const Spinor& a, const Spinor& b) {
  return {a.c1 + b.c1, a.c2 + b.c2};
}
inline Spinor operator-(const Spinor& a, const Spinor& b) {
  return {a.c1 - b.c1, a.c2 - b.c2};
}
inline Spinor operator-(const Spinor& a) { return {-a.c1, -a.c2}; }
inline Spinor operator*(double s, const Spinor& a) {
  return {s * a.c1, s * a.c2};
}
inline Spinor operator*(const Complex& s, const Spinor& a) {
  return {s * a.c1, s * a.c2};
}

inline bool is_finite(const Spinor& a) {
  return std::isfinite(a.c1.real()) && std::isfinite(a.c1.imag()) &&
         std::isfinite(a.c2.real()) && std::isfinite(a.c2.imag());
}

/// Mate (conjugate) spinor: mate(psi) = (-conj(psi2), conj(psi1)).
/// Anti-linear; mate(mate(psi)) = -psi; Hermitian-orthogonal to psi.
inline Spinor mate(const Spinor& psi) {
  return {-std::conj(psi.c2), std::conj(psi.c1)};
}

/// Squared Hermitian norm |psi1|^2 + |psi2|^2. Equals the common magnitude of
/// the three triad vectors carried by psi.
inline double norm_sq(const Spinor& psi) {
  return std::norm(psi.c1) + std::norm(psi.c2);
}

/// Symmetric bilinear form phi^t sigma psi. Componentwise:
///   (phi1 psi1 - phi2 psi2, i(phi1 psi1 + phi2 psi2), -(phi1 psi2 + phi2 psi1)).
/// Symmetric in its arguments since the sigma matrices are symmetric.
inline Vec3C sigma_bilinear(const Spinor& phi, const Spinor& psi) {
  const Complex p11 = phi.c1 * psi.c1;
  const Complex p22 = phi.c2 * psi.c2;
  const Complex p12 = phi.c1 * psi.c2;
  const Complex p21 = phi.c2 * psi.c1;
  return {p11 - p22, Complex(0.0, 1.0) * (p11 + p22), -(p12 + p21)};
}

/// Ordered triad {a, b, c} of equal-magnitude, mutually orthogonal 3-vectors
/// with det(a, b, c) > 0.
struct Triad {
  Vec3R a;
  Vec3R b;
  Vec3R c;
};

/// Magnitude scale of a triad (mean of the three vector norms).
double triad_scale(const Triad& t);

/// True when t is pairwise orthogonal, of equal magnitudes and right-handed,
/// with the orthogonality/magnitude defects bounded by tol relative to the
/// triad's own scale.
bool is_valid_triad(const Triad& t, double tol);

/// Projects a spinor onto its triad: a = Re(psi^t sigma psi),
/// b = Im(psi^t sigma psi), c = -mate(psi)^t sigma psi. The c vector is real
/// up to rounding; its imaginary residue is asserted below 1e-12 (relative)
/// and discarded. |a| = |b| = |c| = norm_sq(psi).
///
/// Throws ZeroSpinorError when norm_sq(psi) <= 1e-30.
Triad triad_from_spinor(const Spinor& psi);

/// Recovers the spinor pair (psi, -psi) carrying a given triad. With
/// m = a + ib the component squares are
///   psi1^2 = (m1 - i m2)/2,  psi2^2 = -(m1 + i m2)/2,  psi1 psi2 = -m3/2;
/// the larger-magnitude square is resolved by principal square root and the
/// other component from the product, which avoids cancellation when one
/// component is nearly zero.
///
/// Throws ZeroTriadError when |a| <= 1e-30 and NotOrthonormalError when the
/// triad invariants fail at tolerance 1e-6.
std::pair<Spinor, Spinor> spinor_from_triad(const Triad& t);

}  // namespace spinframes

#endif
