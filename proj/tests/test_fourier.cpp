#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_3.hpp>

#include "hypgreen/errors.hpp"
#include "hypgreen/fourier.hpp"
#include "hypgreen/geometry.hpp"
#include "hypgreen/greens.hpp"

using namespace hypgreen;
using namespace hypgreen::fourier;
using geometry::ABQuantities;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

template <class F>
double gk(F f, double a, double b, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 12, tol);
}

// Independent oracle for H_m: h^2 and h^3 written in c = A - B cos psi, split
// near psi = 0 so the Kronrod rule sees the peak.
double oracle_Hm(int d, int m, const ABQuantities& ab) {
  auto h = [&](double psi) {
    const double s = std::sin(psi / 2);
    const double cm1 = ab.gap + 2 * ab.B * s * s;  // c - 1
    const double c = 1 + cm1;
    const double v = d == 2 ? 0.5 * std::log((c + 1) / cm1) : c / std::sqrt(cm1 * (c + 1)) - 1;
    return v * std::cos(m * psi);
  };
  double total = 0, a = 0;
  for (double b : {1e-3, 1e-2, 0.1, 0.5, pi}) {
    total += gk(h, a, b);
    a = b;
  }
  return (m == 0 ? 1.0 : 2.0) / pi * total;
}

} // namespace

TEST_CASE("d = 2 closed form") {
  CHECK(rel(fourier_d2(0, 0.0, 1.0), std::log(1 / std::tanh(0.5))) < 1e-15);
  CHECK(fourier_d2(3, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(fourier_d2(0, 0.0, 0.0), SingularityError);
  for (auto [r, rp] : {std::pair{0.5, 1.0}, {1.3, 0.2}, {2.0, 2.1}}) {
    const auto ab = geometry::ab_quantities(r, rp, {}, {});
    for (int n : {0, 1, 2, 5, 9}) {
      CHECK(std::fabs(fourier_d2(n, r, rp) - oracle_Hm(2, n, ab)) < 1e-11);
      CHECK(std::fabs(fourier_quadrature(2, n, r, rp, {}, {}) - fourier_d2(n, r, rp)) < 1e-9);
    }
  }
}

TEST_CASE("d = 2 kernel pieces") {
  for (double z : {0.1, 0.5, 0.9}) {
    CHECK(std::fabs(d2_I_series(z) - d2_I_closed(z)) < 1e-14);
    for (int n : {1, 2, 5}) CHECK(rel(d2_J_series(n, z), d2_J_closed(n, z)) < 1e-12);
  }
  const auto k = d2_kernel(0.7, 1.1);
  const double s = std::sinh(0.7) * std::sinh(1.1), c = std::cosh(0.7) * std::cosh(1.1);
  CHECK(rel(k.z_plus, s / (c + 1)) < 1e-15);
  CHECK(rel(k.z_minus, s / (c - 1)) < 1e-15);

  const auto l = d2_lambda_check(0.7, 1.1, 0.3);
  CHECK(std::fabs(l.lambda_plus - std::log(1 - k.z_plus * std::cos(0.3))) < 1e-9);
  CHECK(std::fabs(l.lambda_minus - std::log(1 - k.z_minus * std::cos(0.3))) < 1e-9);
  const auto q = d2_lambda_check(0.7, 1.1, pi / 2);
  CHECK(std::fabs(q.lambda_plus) < 1e-14);
  CHECK(std::fabs(q.lambda_minus) < 1e-12);
}

TEST_CASE("general-d quadrature") {
  const ABQuantities flat{std::cosh(0.5) * std::cosh(0.8), 0.0, std::cosh(0.5) * std::cosh(0.8) - 1};
  CHECK(fourier_quadrature(3, 2, flat) == 0.0);
  CHECK(rel(fourier_quadrature(3, 0, flat), greens::I_d(3, std::acosh(flat.A))) < 1e-14);
  const auto ab = geometry::ab_quantities(0.6, 0.9, {1.2}, {0.7});
  for (int m = 0; m <= 4; ++m) CHECK(std::fabs(fourier_quadrature(3, m, ab) - oracle_Hm(3, m, ab)) < 1e-10);
  CHECK(std::fabs(fourier_quadrature(3, 0, ab) - fourier_d3_m0_closed(ab)) < 1e-9);
  // Representation choice inside the integrand does not matter.
  const auto ab5 = geometry::ab_quantities(0.6, 0.9, {1.2, 0.4, 2.0}, {0.7, 0.5, 1.0});
  CHECK(rel(fourier_quadrature(5, 1, ab5), fourier_quadrature(5, 1, ab5, greens::Representation::legendre_q)) <
        1e-9);
  const auto touching = geometry::ab_quantities(1.0, 1.0, {1.0}, {1.0});
  CHECK_THROWS_AS(fourier_quadrature(3, 0, touching), SingularityError);
}

TEST_CASE("elliptic reduction") {
  const auto ab = geometry::ab_quantities(0.6, 0.9, {1.2}, {0.7});
  const auto red = bf_reduce(ab);
  CHECK(red.b < red.a);
  CHECK(red.b > 1.0);
  CHECK(rel(red.g, red.g_defining) < 1e-14);
  CHECK(rel(red.g_defining, 2 / std::sqrt((red.a - red.c) * (red.b - red.d_root))) < 1e-14);
  CHECK(rel(red.kc2, 1 - red.k2) < 1e-12);
  CHECK(rel(red.one_minus_alpha2, 1 - red.alpha2) < 1e-12);
  CHECK(rel(red.u1, boost::math::ellint_1(std::sqrt(red.k2))) < 1e-14);

  // Symmetric points stay just off the touching boundary.
  const auto sym = bf_reduce(geometry::ab_quantities(1.0, 1.0, {0.8}, {0.8 + 1e-4}));
  CHECK(sym.b < sym.a);
  CHECK(sym.kc2 > 0.0);

  // B -> 0+: a, b ~ A / B, so g K(k) tends to pi B / sqrt(A^2 - 1) and H_0 to the flat value.
  const double A = std::cosh(0.5) * std::cosh(0.8);
  const ABQuantities tiny{A, 1e-7, A - 1e-7 - 1};
  const auto r0 = bf_reduce(tiny);
  CHECK(r0.k2 < 1e-6);
  CHECK(rel(quartic_moment(0, r0) / tiny.B, pi / std::sqrt(A * A - 1)) < 1e-6);
  CHECK(rel(fourier_d3_elliptic(0, tiny), greens::I_d(3, std::acosh(A))) < 1e-6);

  CHECK_THROWS_AS(bf_reduce(1.5, 0.0), DomainError);
  CHECK_THROWS_AS(bf_reduce(1.5, 0.6), DomainError);
}

TEST_CASE("V_j integrals") {
  const auto red = bf_reduce(geometry::ab_quantities(0.6, 0.9, {1.2}, {0.7}));
  const double k = std::sqrt(red.k2);
  CHECK(rel(bf_V(0, red), boost::math::ellint_1(k)) < 1e-14);
  CHECK(rel(bf_V(1, red), boost::math::ellint_3(k, red.alpha2)) < 1e-13);

  EllipticReduction manual;
  manual.alpha2 = 0.5;
  manual.k2 = 0.3;
  manual.kc2 = 0.7;
  manual.one_minus_alpha2 = 0.5;
  manual.k2_minus_alpha2 = -0.2;
  auto vj = [&](int j) {
    return gk(
        [&](double t) {
          const double s2 = std::sin(t) * std::sin(t);
          return std::pow(1 - 0.5 * s2, -j) / std::sqrt(1 - 0.3 * s2);
        },
        0, pi / 2);
  };
  const auto V = bf_V_sequence(6, manual);
  for (int j = 0; j <= 6; ++j) CHECK(rel(V[j], vj(j)) < 1e-12);
  for (int j = 1; j <= 6; ++j) {
    CHECK(V[j] >= V[j - 1]);
    CHECK(V[j] <= V[j - 1] / 0.5);
  }
}

TEST_CASE("quartic moments") {
  const auto red = bf_reduce(geometry::ab_quantities(0.6, 0.9, {1.2}, {0.7}));
  auto oracle = [&](int p) {
    // x = cos t removes the endpoint singularities.
    return gk([&](double t) {
      const double x = std::cos(t);
      return std::pow(x, p) / std::sqrt((red.a - x) * (red.b - x));
    }, 0, pi);
  };
  CHECK(rel(quartic_moment(0, red), red.g * red.u1) < 1e-14);
  for (int p = 0; p <= 2; ++p) CHECK(rel(quartic_moment_special(p, red), quartic_moment(p, red)) < 1e-12);
  for (int p = 0; p <= 8; ++p) {
    CAPTURE(p);
    CHECK(std::fabs(quartic_moment(p, red) - oracle(p)) < 1e-9 * std::fabs(oracle(0)));
  }
  CHECK_THROWS_AS(quartic_moment_special(3, red), DomainError);
}

TEST_CASE("Chebyshev monomial coefficients") {
  const auto c = chebyshev_monomial_coefficients(5);
  CHECK(c == std::vector<double>{0, 5, 0, -20, 0, 16});
  const auto c12 = chebyshev_monomial_coefficients(12);
  double v = 0;
  for (int p = 12; p >= 0; --p) v = v * 0.37 + c12[p];
  CHECK(rel(v, std::cos(12 * std::acos(0.37))) < 1e-12);
}

TEST_CASE("d = 3 elliptic coefficients") {
  const double r = 0.6, rp = 0.9, t = 1.2, tp = 0.7;
  const auto ab = geometry::ab_quantities(r, rp, {t}, {tp});
  CHECK(std::fabs(fourier_d3_elliptic(0, ab) - fourier_d3_m0_closed(ab)) < 1e-12);
  CHECK(std::fabs(fourier_d3_m0_closed(r, rp, t, tp) - fourier_d3_m0_closed(ab)) < 1e-12);
  CHECK(std::fabs(fourier_d3_elliptic(1, r, rp, t, tp) - fourier_quadrature(3, 1, ab)) < 1e-8);
  for (int m = 0; m <= 6; ++m) CHECK(std::fabs(fourier_d3_elliptic(m, ab) - oracle_Hm(3, m, ab)) < 1e-11);

  // 50-digit reference values far into the decay.
  const auto far = geometry::ab_quantities(0.3, 2.0, {0.5}, {2.5});
  CHECK(rel(fourier_d3_elliptic(3, far), 8.245550850416515e-6) < 1e-10);
  CHECK(rel(fourier_d3_elliptic(8, far), 1.250599227951587e-12) < 1e-9);
  CHECK(rel(fourier_d3_elliptic(11, far), 9.193838644965628e-17) < 1e-8);
  CHECK(rel(fourier_d3_elliptic(12, far), 3.841903862949834e-18) < 1e-8);

  CHECK(fourier_d3_elliptic(2, r, rp, t, 0.0) == 0.0);
}

TEST_CASE("elliptic and quadrature agree on random geometries") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tried = 0;
  double worst = 0;
  while (tried < 20) {
    const double r = 2 * u(rng), rp = 2 * u(rng), t = pi * u(rng), tp = pi * u(rng);
    const auto ab = geometry::ab_quantities(r, rp, {t}, {tp});
    if (ab.gap < 1e-2 || ab.B <= 0) continue;
    ++tried;
    for (int m = 0; m <= 5; ++m) {
      const double e = fourier_d3_elliptic(m, ab);
      worst = std::max(worst, std::fabs(e - fourier_quadrature(3, m, ab)) / (1 + std::fabs(e)));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("Euclidean limit of the m = 0 coefficient") {
  const double h0 = fourier_d3_elliptic(0, 1e-2, 5e-3, 1.0, 1.3);
  CHECK(std::fabs((h0 + 1) / euclid_g3_m0(1e-2, 5e-3, 1.0, 1.3) - 1) < 1e-2);
  // The comparator itself: average of 1/|x - x'| over the azimuth.
  const double r = 1.0, rp = 2.0, t = 0.4, tp = 1.9;
  const double avg = gk([&](double psi) {
    const double c = std::sin(t) * std::sin(tp) * std::cos(psi) + std::cos(t) * std::cos(tp);
    return 1 / std::sqrt(r * r + rp * rp - 2 * r * rp * c);
  }, 0, pi) / pi;
  CHECK(rel(euclid_g3_m0(r, rp, t, tp), avg) < 1e-13);
}

TEST_CASE("resummation") {
  const auto ab = geometry::ab_quantities(0.6, 0.9, {1.2}, {0.7});
  std::vector<double> coeffs;
  for (int m = 0; m <= 40; ++m) coeffs.push_back(fourier_d3_elliptic(m, ab));
  const double target = greens::I_d(3, geometry::acosh1p(ab.gap + 2 * ab.B));
  const auto s = resum(coeffs, pi, decay_ratio(ab), 1e-10);
  CHECK(std::fabs(s.value - target) < 1e-6);

  const auto d2 = fourier_series(2, 0.5, 1.0, {}, {}, 2.0, 1e-12);
  CHECK(d2.eval.converged);
  const double rho = std::acosh(std::cosh(0.5) * std::cosh(1.0) - std::sinh(0.5) * std::sinh(1.0) * std::cos(2.0));
  CHECK(std::fabs(d2.eval.value - std::log(1 / std::tanh(rho / 2))) < 1e-8);

  const auto d3 = fourier_series(3, 0.6, 0.9, {1.2}, {0.7}, 0.4, 1e-10);
  CHECK(d3.eval.converged);
  CHECK(d3.eval.terms_used <= 60);
  const double rho3 = geometry::acosh1p(ab.gap + 2 * ab.B * std::sin(0.2) * std::sin(0.2));
  CHECK(std::fabs(d3.eval.value - greens::I_d(3, rho3)) < 1e-6 * greens::I_d(3, rho3));

  // Coincident points: the coefficients stop decaying.
  const auto flat = resum(std::vector<double>(30, 0.1), 0.0);
  CHECK_FALSE(flat.converged);
  CHECK(decay_ratio(geometry::ab_quantities(1.0, 1.0, {1.0}, {1.0 + 1e-9})) > 0.99);
}
