#pragma once

// Complete elliptic integrals via Carlson's symmetric forms (duplication
// algorithm). Templated on the real type so the elliptic Fourier assembly can
// run in extended precision; double instantiations are the common case.

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypgreen/errors.hpp"

namespace hypgreen::specfun {

namespace detail {

template <class Real>
Real carlson_tolerance(int power) {
  using std::pow;
  return pow(Real(3) * std::numeric_limits<Real>::epsilon(), Real(-1) / Real(power));
}

template <class Real>
Real max_abs(Real a, Real b) {
  using std::abs;
  return abs(a) > abs(b) ? abs(a) : abs(b);
}

} // namespace detail

/// R_C(x, y) for x >= 0, y > 0.
template <class Real>
Real carlson_rc(Real x, Real y) {
  using std::abs;
  using std::sqrt;
  if (x < 0 || y <= 0) throw DomainError("carlson_rc: requires x >= 0 and y > 0");
  Real a = (x + y + y) / 3;
  Real q = detail::carlson_tolerance<Real>(8) * abs(a - x);
  for (int it = 0; it < 200 && q >= abs(a); ++it) {
    const Real lambda = 2 * sqrt(x) * sqrt(y) + y;
    a = (a + lambda) / 4;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    q /= 4;
  }
  const Real s = (y - a) / a;
  const Real s2 = s * s;
  const Real poly = 1 + s2 * (Real(3) / 10 + s * (Real(1) / 7 + s * (Real(3) / 8 + s * (Real(9) / 22 + s * (Real(159) / 208 + s * Real(9) / 8)))));
  return poly / sqrt(a);
}

/// R_F(x, y, z) for nonnegative arguments with at most one zero.
template <class Real>
Real carlson_rf(Real x, Real y, Real z) {
  using std::abs;
  using std::sqrt;
  if (x < 0 || y < 0 || z < 0) throw DomainError("carlson_rf: negative argument");
  if ((x == 0) + (y == 0) + (z == 0) > 1) throw DomainError("carlson_rf: more than one zero argument");
  Real a = (x + y + z) / 3;
  Real q = detail::carlson_tolerance<Real>(6) *
           detail::max_abs(detail::max_abs(a - x, a - y), a - z);
  for (int it = 0; it < 200 && q >= abs(a); ++it) {
    const Real sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
    const Real lambda = sx * sy + sy * sz + sz * sx;
    a = (a + lambda) / 4;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
    q /= 4;
  }
  const Real dx = (a - x) / a;
  const Real dy = (a - y) / a;
  const Real dz = -dx - dy;
  const Real e2 = dx * dy - dz * dz;
  const Real e3 = dx * dy * dz;
  const Real poly = 1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - Real(3) * e2 * e3 / 44;
  return poly / sqrt(a);
}

/// R_J(x, y, z, p) for x, y, z >= 0 (at most one zero) and p > 0.
template <class Real>
Real carlson_rj(Real x, Real y, Real z, Real p) {
  using std::abs;
  using std::pow;
  using std::sqrt;
  if (x < 0 || y < 0 || z < 0) throw DomainError("carlson_rj: negative argument");
  if (p <= 0) throw DomainError("carlson_rj: requires p > 0");
  if ((x == 0) + (y == 0) + (z == 0) > 1) throw DomainError("carlson_rj: more than one zero argument");
  Real a = (x + y + z + p + p) / 5;
  const Real delta = (p - x) * (p - y) * (p - z);
  Real q = pow(std::numeric_limits<Real>::epsilon() / 4, Real(-1) / Real(6)) *
           detail::max_abs(detail::max_abs(a - x, a - y), detail::max_abs(a - z, a - p));
  Real sum = 0;
  Real scale = 1;   // 4^-m
  Real scale3 = 1;  // 4^-3m
  for (int it = 0; it < 200 && q >= abs(a); ++it) {
    const Real sx = sqrt(x), sy = sqrt(y), sz = sqrt(z), sp = sqrt(p);
    const Real lambda = sx * sy + sy * sz + sz * sx;
    const Real dm = (sp + sx) * (sp + sy) * (sp + sz);
    const Real em = scale3 * delta / (dm * dm);
    sum += scale / dm * carlson_rc(Real(1), Real(1) + em);
    a = (a + lambda) / 4;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
    p = (p + lambda) / 4;
    scale /= 4;
    scale3 /= 64;
    q /= 4;
  }
  const Real dx = (a - x) / a;
  const Real dy = (a - y) / a;
  const Real dz = (a - z) / a;
  const Real dp = -(dx + dy + dz) / 2;
  const Real e2 = dx * dy + dx * dz + dy * dz - 3 * dp * dp;
  const Real e3 = dx * dy * dz + 2 * e2 * dp + 4 * dp * dp * dp;
  const Real e4 = (2 * dx * dy * dz + e2 * dp + 3 * dp * dp * dp) * dp;
  const Real e5 = dx * dy * dz * dp * dp;
  const Real poly = 1 - Real(3) * e2 / 14 + e3 / 6 + Real(9) * e2 * e2 / 88 - Real(3) * e4 / 22 -
                    Real(9) * e2 * e3 / 52 + Real(3) * e5 / 26;
  return scale * poly / (a * sqrt(a)) + 6 * sum;
}

/// R_D(x, y, z) = R_J(x, y, z, z).
template <class Real>
Real carlson_rd(Real x, Real y, Real z) {
  return carlson_rj(x, y, z, z);
}

/// Complete elliptic integral of the first kind, modulus k in [0, 1).
template <class Real>
Real elliptic_K(Real k) {
  if (!(k >= 0) || !(k < 1)) throw DomainError("elliptic_K: modulus must satisfy 0 <= k < 1");
  return carlson_rf(Real(0), Real(1) - k * k, Real(1));
}

/// Complete elliptic integral of the second kind, modulus k in [0, 1].
template <class Real>
Real elliptic_E(Real k) {
  if (!(k >= 0) || !(k <= 1)) throw DomainError("elliptic_E: modulus must satisfy 0 <= k <= 1");
  if (k == 1) return Real(1);
  const Real k2 = k * k;
  const Real kc2 = Real(1) - k2;
  return carlson_rf(Real(0), kc2, Real(1)) - k2 / 3 * carlson_rd(Real(0), kc2, Real(1));
}

/// Complete elliptic integral of the third kind,
///   Pi(alpha2, k) = int_0^{pi/2} dtheta / ((1 - alpha2 sin^2) sqrt(1 - k^2 sin^2)),
/// for alpha2 < 1 and 0 <= k < 1.
template <class Real>
Real elliptic_Pi(Real alpha2, Real k) {
  if (!(k >= 0) || !(k < 1)) throw DomainError("elliptic_Pi: modulus must satisfy 0 <= k < 1");
  if (!(alpha2 < 1)) throw DomainError("elliptic_Pi: characteristic must satisfy alpha2 < 1");
  const Real kc2 = Real(1) - k * k;
  const Real rf = carlson_rf(Real(0), kc2, Real(1));
  if (alpha2 == 0) return rf;
  return rf + alpha2 / 3 * carlson_rj(Real(0), kc2, Real(1), Real(1) - alpha2);
}

// Variants taking the complementary parameters directly. Near-singular
// geometries produce k^2 -> 1 and alpha^2 -> 1, where forming 1 - k^2 from k
// would cancel; callers that know kc2 = 1 - k^2 and 1 - alpha^2 in closed form
// pass them here.

template <class Real>
Real elliptic_K_kc2(Real kc2) {
  if (!(kc2 > 0) || !(kc2 <= 1)) throw DomainError("elliptic_K: complementary parameter must lie in (0, 1]");
  return carlson_rf(Real(0), kc2, Real(1));
}

template <class Real>
Real elliptic_E_kc2(Real k2, Real kc2) {
  if (!(kc2 > 0) || !(kc2 <= 1)) throw DomainError("elliptic_E: complementary parameter must lie in (0, 1]");
  return carlson_rf(Real(0), kc2, Real(1)) - k2 / 3 * carlson_rd(Real(0), kc2, Real(1));
}

template <class Real>
Real elliptic_Pi_kc2(Real alpha2, Real one_minus_alpha2, Real kc2) {
  if (!(kc2 > 0) || !(kc2 <= 1)) throw DomainError("elliptic_Pi: complementary parameter must lie in (0, 1]");
  if (!(one_minus_alpha2 > 0)) throw DomainError("elliptic_Pi: characteristic must satisfy alpha2 < 1");
  const Real rf = carlson_rf(Real(0), kc2, Real(1));
  if (alpha2 == 0) return rf;
  return rf + alpha2 / 3 * carlson_rj(Real(0), kc2, Real(1), one_minus_alpha2);
}

} // namespace hypgreen::specfun
