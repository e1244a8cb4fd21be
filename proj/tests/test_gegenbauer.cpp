#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hypgreen/errors.hpp"
#include "hypgreen/fourier.hpp"
#include "hypgreen/geometry.hpp"
#include "hypgreen/gegenbauer.hpp"
#include "hypgreen/greens.hpp"
#include "hypgreen/specfun.hpp"

using namespace hypgreen;
using namespace hypgreen::gegenbauer;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double closed(int d, double R, double r, double rp, double gamma) {
  return greens::fundamental_H_rho(d, R, geometry::acosh1p(geometry::cosh_rho_m1(r, rp, gamma)));
}

} // namespace

TEST_CASE("radial functions") {
  CHECK_THROWS_AS(radial_ul(2, 1.0, 0, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(radial_ul(3, 1.0, 0, 0.0, 1.0), DomainError);
  CHECK(radial_ul(4, 1.0, 3, 0.5, 1.0) == radial_ul(4, 1.0, 3, 1.0, 0.5));
  // d = 3, l = 0: P_{1/2}^{-1/2} Qhat_{1/2}^{1/2} / sinh^{1/2} sinh'^{1/2} = e^{-r>} sinh r< / (sinh r sinh r').
  const double r = 0.4, rp = 1.3;
  CHECK(rel(radial_ul(3, 1.0, 0, r, rp), std::exp(-rp) * std::sinh(r) / (std::sinh(r) * std::sinh(rp))) < 1e-13);

  // Ratio of successive u_l tends to (r</r>) (2l+d-2)/(2l+d) for small radii.
  const double a = 0.1, b = 0.2;
  const int d = 4;
  const double ratio = radial_ul(d, 1.0, 31, a, b) / radial_ul(d, 1.0, 30, a, b);
  CHECK(std::fabs(ratio / (0.5 * (60.0 + d - 2) / (60.0 + d)) - 1) < 0.05);

  const auto prods = radial_products(5, 0.7, 1.4, 60);
  CHECK(prods.size() == 61u);
  CHECK(std::fabs(prods[60] / prods[59] / radial_ratio(0.7, 1.4) - 1) < 0.05);
  CHECK(rel(radial_ratio(0.7, 1.4), std::tanh(0.35) / std::tanh(0.7)) < 1e-15);
}

TEST_CASE("jump of the radial derivative") {
  CHECK(discontinuity_check(3, 1.0, 0, 1.0) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(discontinuity_check(5, 2.0, 2, 0.5) == doctest::Approx(-1.0 / 8.0).epsilon(1e-6));
  for (int d = 3; d <= 5; ++d) {
    for (int l : {0, 1, 5}) {
      CHECK(discontinuity_check(d, 1.5, l, 0.8) == doctest::Approx(-1.0 / std::pow(1.5, d - 2)).epsilon(1e-6));
    }
  }
}

TEST_CASE("Gegenbauer series against the closed form") {
  const auto s = gegenbauer_series(3, 1.0, 0.5, 1.0, pi / 2, 1e-10);
  CHECK(s.converged);
  const double rho = std::acosh(std::cosh(0.5) * std::cosh(1.0));
  CHECK(rel(s.value, (1 / std::tanh(rho) - 1) / (4 * pi)) < 1e-9);

  const auto axis = gegenbauer_series(3, 2.0, 0.3, 1.1, 0.0, 1e-12);
  CHECK(axis.converged);
  CHECK(rel(axis.value, closed(3, 2.0, 0.3, 1.1, 0.0)) < 1e-9);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d : {4, 6}) {
    for (int i = 0; i < 10; ++i) {
      const double rg = 0.2 + 1.5 * u(rng), rl = rg * 0.8 * u(rng) + 1e-3, gamma = pi * u(rng);
      const auto v = gegenbauer_series(d, 1.3, rl, rg, gamma, 1e-12);
      CHECK(v.converged);
      CHECK(rel(v.value, closed(d, 1.3, rl, rg, gamma)) < 1e-9);
    }
  }
}

TEST_CASE("diagonal and singular configurations") {
  const auto diag = gegenbauer_series(3, 1.0, 0.8, 0.8, 1.0, 1e-8);
  CHECK(rel(diag.value, closed(3, 1.0, 0.8, 0.8, 1.0)) < 1e-6);
  CHECK_THROWS_AS(gegenbauer_series(3, 1.0, 0.8, 0.8, 0.0), SingularityError);
}

TEST_CASE("addition theorem") {
  const double r = 0.6, rp = 0.9, t = 1.2, tp = 0.7;
  const auto m0 = addition_theorem_H3(0, r, rp, t, tp, 1e-12);
  CHECK(m0.converged);
  CHECK(std::fabs(m0.value - fourier::fourier_d3_m0_closed(r, rp, t, tp)) < 1e-7);
  const auto m2 = addition_theorem_H3(2, r, rp, t, tp, 1e-12);
  CHECK(std::fabs(m2.value - fourier::fourier_quadrature(3, 2, r, rp, {t}, {tp})) < 1e-7);
  for (int m = 1; m <= 3; ++m) CHECK(addition_theorem_H3(m, r, rp, t, 0.0).value == 0.0);
}

TEST_CASE("Euclidean expansion") {
  // gamma = 0: weighted generating function at x = 1.
  CHECK(rel(euclid_gegenbauer(5, 0.4, 1.0, 0.0, 400), 1 / std::pow(0.6, 3)) < 1e-12);
  CHECK(rel(euclid_gegenbauer(3, 1.0, 2.0, pi / 3, 200), 1 / std::sqrt(3.0)) < 1e-12);
  const double a = euclid_gegenbauer(4, 0.5, 1.0, 1.0, 20) - euclid_gegenbauer(4, 0.5, 1.0, 1.0, 19);
  const double b = euclid_gegenbauer(4, 0.5, 1.0, 1.0, 21) - euclid_gegenbauer(4, 0.5, 1.0, 1.0, 20);
  CHECK(std::fabs(b / a) < 1.0);
}

TEST_CASE("conjecture sides") {
  for (double mu : {0.3, 0.75, 1.5}) {
    const auto c = conjecture_check(mu, 0.5, 1.0, 1.0, 1e-12);
    CHECK(c.rhs.converged);
    CHECK(std::fabs(c.lhs - c.rhs.value) <= 1e-6 * std::fabs(c.lhs));
    CHECK_FALSE(c.chebyshev_limit);
  }
  // Integer-forced orders reduce to the proven expansion.
  for (int d = 3; d <= 5; ++d) {
    const double mu = (d - 2) / 2.0;
    const auto c = conjecture_check(mu, 0.4, 1.2, 0.9, 1e-13);
    const double rho = geometry::acosh1p(geometry::cosh_rho_m1(0.4, 1.2, 0.9));
    const double expect = std::pow(2.0, mu) * std::tgamma(mu + 1) * greens::I_d(d, rho);
    CHECK(rel(c.lhs, expect) < 1e-12);
    CHECK(rel(c.rhs.value, expect) < 1e-9);
  }
  const auto z = conjecture_check(0.0, 0.4, 1.2, 0.9, 1e-13);
  CHECK(z.chebyshev_limit);
  const double rho = geometry::acosh1p(geometry::cosh_rho_m1(0.4, 1.2, 0.9));
  CHECK(rel(z.rhs.value, greens::I_d(2, rho)) < 1e-9);
}
