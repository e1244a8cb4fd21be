#include "hypgreen/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "hypgreen/errors.hpp"
#include "hypgreen/fourier.hpp"
#include "hypgreen/gegenbauer.hpp"
#include "hypgreen/geometry.hpp"
#include "hypgreen/greens.hpp"
#include "hypgreen/specfun.hpp"

namespace hypgreen::validation {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRhoGrid[] = {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

// Deterministic uniform draws independent of the standard library's distributions.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return a + (b - a) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 rng_;
};

class Timer {
public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double rel_dev(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

CheckResult finish(std::string suite, std::string name, double measured, double threshold, const Timer& t,
                   double time_limit = 0.0, std::string note = {}) {
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.measured = measured;
  r.threshold = threshold;
  r.seconds = t.seconds();
  r.time_limit = time_limit;
  r.note = std::move(note);
  r.passed = std::isfinite(measured) && measured <= threshold && (time_limit <= 0.0 || r.seconds <= time_limit);
  return r;
}

struct D3Geometry {
  double r, rp, theta, theta_p;
  geometry::ABQuantities ab;
};

// Random d = 3 geometries with A - B - 1 >= min_gap and decay ratio >= min_ratio.
std::vector<D3Geometry> d3_geometries(std::uint64_t seed, int count, double min_gap, double min_ratio,
                                      double max_ratio = 1.0) {
  Sampler s(seed);
  std::vector<D3Geometry> out;
  while (static_cast<int>(out.size()) < count) {
    D3Geometry g;
    g.r = s.uniform(0.1, 2.0);
    g.rp = s.uniform(0.1, 2.0);
    g.theta = s.uniform(0.2, kPi - 0.2);
    g.theta_p = s.uniform(0.2, kPi - 0.2);
    g.ab = geometry::ab_quantities(g.r, g.rp, {g.theta}, {g.theta_p});
    const double q = fourier::decay_ratio(g.ab);
    if (g.ab.gap >= min_gap && q >= min_ratio && q <= max_ratio) out.push_back(g);
  }
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"representations", "wronskian", "fourier",
                                              "gegenbauer",      "addition",  "limits"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

// ---- representations -------------------------------------------------------

CheckResult check_representation_equivalence() {
  Timer t;
  double worst = 0.0;
  for (int d = 2; d <= 9; ++d) {
    for (double rho : kRhoGrid) {
      double v[4];
      int i = 0;
      for (auto rep : greens::kAllRepresentations) v[i++] = greens::I_d(d, rho, rep);
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) worst = std::max(worst, rel_dev(v[a], v[b]));
    }
  }
  return finish("representations", "four representations agree, d=2..9", worst, 1e-10, t, 1.0);
}

CheckResult check_odd_dual_forms() {
  Timer t;
  double worst = 0.0;
  for (int d : {3, 5, 7, 9}) {
    for (double rho : kRhoGrid) {
      const auto [a, b] = greens::I_d_finite_odd_variants(d, rho);
      worst = std::max(worst, rel_dev(a, b));
    }
  }
  return finish("representations", "odd-d finite-sum variants agree", worst, 1e-12, t);
}

// ---- wronskian -------------------------------------------------------------

namespace {
constexpr double kWronskNu[] = {0.0, 0.5, 1.0, 1.5, 2.5};
constexpr double kWronskShift[] = {0.0, 1.0, 5.0, 20.0};
constexpr double kWronskZ[] = {1.01, 1.5, 3.0, 10.0};
} // namespace

CheckResult check_wronskian() {
  Timer t;
  double worst = 0.0;
  for (double nu : kWronskNu) {
    for (double dm : kWronskShift) {
      for (double z : kWronskZ) {
        // (z^2 - 1) W{P^{-mu}, Qhat^mu} through the degree-shift derivative formulas.
        const double mu = nu + dm;
        const auto c = specfun::CutArg::from_z(z);
        const double p = specfun::legendre_P_log(nu, -mu, c).value();
        const double p1 = specfun::legendre_P_log(nu + 1.0, -mu, c).value();
        const double q = specfun::legendre_Qhat_log(nu, mu, c).value();
        const double q1 = specfun::legendre_Qhat_log(nu + 1.0, mu, c).value();
        const double w = (nu - mu + 1.0) * p * q1 - (nu + mu + 1.0) * q * p1;
        worst = std::max(worst, std::fabs(w + 1.0));
      }
    }
  }
  return finish("wronskian", "(z^2-1) W{P^-mu, Qhat^mu} = -1", worst, 1e-9, t, 1.0);
}

CheckResult check_wronskian_finite_difference() {
  Timer t;
  double worst = 0.0;
  for (double nu : kWronskNu) {
    for (double dm : kWronskShift) {
      for (double z : kWronskZ) {
        const double mu = nu + dm;
        auto p = [&](double x) { return specfun::legendre_P_log(nu, -mu, specfun::CutArg::from_z(x)).value(); };
        auto q = [&](double x) { return specfun::legendre_Qhat_log(nu, mu, specfun::CutArg::from_z(x)).value(); };
        const double h = 1e-4 * (z - 1.0);
        auto deriv = [&](const auto& f) {
          return (f(z - 2 * h) - 8 * f(z - h) + 8 * f(z + h) - f(z + 2 * h)) / (12 * h);
        };
        const double w = (p(z) * deriv(q) - deriv(p) * q(z)) * (z * z - 1.0);
        worst = std::max(worst, std::fabs(w + 1.0));
      }
    }
  }
  return finish("wronskian", "finite-difference Wronskian", worst, 1e-6, t);
}

CheckResult check_order_recurrence_casoratian() {
  Timer t;
  double worst = 0.0;
  for (double nu : {0.5, 1.0, 1.5, 2.0}) {
    for (double r : {0.3, 1.0, 3.0}) {
      const auto z = specfun::CutArg::from_cosh(r);
      const auto q = specfun::legendre_Qhat_order_sequence(nu, z, 60);
      for (int l = 1; l < 60; l += 7) {
        const double mu = nu + l;
        const auto p = specfun::legendre_P_log(nu, -mu, z);
        const auto pm = specfun::legendre_P_log(nu, -(mu - 1.0), z);
        worst = std::max(worst, std::fabs(specfun::casoratian_residual(mu, z, p, pm, q[l], q[l + 1])));
      }
    }
  }
  return finish("wronskian", "order-recurrence Casoratian", worst, 1e-9, t);
}

// ---- fourier ---------------------------------------------------------------

CheckResult check_fourier_m0() {
  Timer t;
  double worst = 0.0;
  for (const auto& g : d3_geometries(101, 20, 1e-3, 0.0)) {
    worst = std::max(worst, rel_dev(fourier::fourier_d3_m0_closed(g.ab), fourier::fourier_quadrature(3, 0, g.ab)));
  }
  return finish("fourier", "d=3 m=0 elliptic closed form vs quadrature", worst, 1e-9, t, 5.0);
}

CheckResult check_fourier_general_m() {
  Timer t;
  double worst = 0.0;
  for (const auto& g : d3_geometries(202, 15, 1e-3, 0.15)) {
    for (int m = 0; m <= 5; ++m) {
      worst = std::max(worst, rel_dev(fourier::fourier_d3_elliptic(m, g.ab), fourier::fourier_quadrature(3, m, g.ab)));
    }
  }
  return finish("fourier", "d=3 moment-assembled H_m vs quadrature, m<=5", worst, 1e-8, t, 20.0);
}

CheckResult check_fourier_resummation() {
  Timer t;
  double worst = 0.0;
  int most_terms = 0;
  Sampler s(303);
  for (int d : {2, 3}) {
    int done = 0;
    while (done < 10) {
      const double r = s.uniform(0.1, 1.5), rp = s.uniform(0.1, 1.5);
      const double phi = s.uniform(0.0, 2.0 * kPi), phi_p = s.uniform(0.0, 2.0 * kPi);
      std::vector<double> th, thp;
      if (d == 3) {
        th = {s.uniform(0.3, kPi - 0.3)};
        thp = {s.uniform(0.3, kPi - 0.3)};
      }
      const auto ab = geometry::ab_quantities(r, rp, th, thp);
      if (!(ab.gap >= 1e-2) || fourier::decay_ratio(ab) > 0.6) continue;
      const auto fs = fourier::fourier_series(d, r, rp, th, thp, phi - phi_p, 1e-10);
      const auto x = geometry::embed({1.0, r, th, phi});
      const auto y = geometry::embed({1.0, rp, thp, phi_p});
      worst = std::max(worst, rel_dev(fs.eval.value, greens::unit_h(d, x, y)));
      if (!fs.eval.converged) worst = std::max(worst, 1.0);
      most_terms = std::max(most_terms, fs.eval.terms_used);
      ++done;
    }
  }
  return finish("fourier", "resummed Fourier series vs unit_h, d=2,3", worst, 1e-6, t, 0.0,
                "at most " + std::to_string(most_terms) + " terms");
}

// ---- gegenbauer ------------------------------------------------------------

namespace {
struct RadialGeometry {
  double r, rp, gamma;
};

// r_> in [0.2, 0.9] keeps tanh(r_</2)/tanh(r_>/2) within 7% of r_</r_>.
std::vector<RadialGeometry> radial_geometries(std::uint64_t seed, int count) {
  Sampler s(seed);
  std::vector<RadialGeometry> out;
  for (int i = 0; i < count; ++i) {
    const double rg = s.uniform(0.2, 0.9);
    const double rl = rg * s.uniform(0.1, 0.8);
    const double gamma = s.uniform(0.0, kPi);
    out.push_back(i % 2 ? RadialGeometry{rl, rg, gamma} : RadialGeometry{rg, rl, gamma});
  }
  return out;
}
} // namespace

CheckResult check_gegenbauer_series() {
  Timer t;
  double worst = 0.0;
  for (int d = 3; d <= 6; ++d) {
    for (const auto& g : radial_geometries(400 + d, 25)) {
      const auto s = gegenbauer::gegenbauer_series(d, 1.0, g.r, g.rp, g.gamma, 1e-12);
      const double rho = geometry::acosh1p(geometry::cosh_rho_m1(g.r, g.rp, g.gamma));
      worst = std::max(worst, rel_dev(s.value, greens::fundamental_H_rho(d, 1.0, rho)));
      if (!s.converged) worst = std::max(worst, 1.0);
    }
  }
  return finish("gegenbauer", "Gegenbauer series vs closed form, d=3..6", worst, 1e-9, t, 10.0);
}

CheckResult check_gegenbauer_ratio() {
  Timer t;
  double worst = 0.0;
  for (int d = 3; d <= 6; ++d) {
    for (const auto& g : radial_geometries(400 + d, 25)) {
      const auto p = gegenbauer::radial_products(d, g.r, g.rp, 40);
      const double target = std::min(g.r, g.rp) / std::max(g.r, g.rp);
      for (int l = 21; l <= 40; ++l) worst = std::max(worst, std::fabs(p[l] / p[l - 1] / target - 1.0));
    }
  }
  return finish("gegenbauer", "term ratio beyond l=20 vs r_</r_>", worst, 0.1, t);
}

CheckResult check_jump_condition() {
  Timer t;
  double worst = 0.0;
  for (int d = 3; d <= 5; ++d) {
    for (int l : {0, 1, 5}) {
      for (double rp : {0.3, 1.0, 2.0}) {
        for (double R : {1.0, 2.0}) {
          const double want = -std::pow(R, 2 - d);
          worst = std::max(worst, std::fabs(gegenbauer::discontinuity_check(d, R, l, rp) / want - 1.0));
        }
      }
    }
  }
  return finish("gegenbauer", "derivative jump = -1/R^(d-2)", worst, 1e-6, t);
}

CheckResult check_harmonicity() {
  Timer t;
  constexpr double h = 5e-3;
  constexpr double rp = 1.0;
  const RadialGeometry points[] = {{0.5, 0, 1.0}, {1.6, 0, 2.0}, {0.7, 0, 0.6}, {2.2, 0, 2.8}};
  // Laplace-Beltrami in geodesic polar coordinates for a function of (r, gamma).
  auto residual = [&](int d, const auto& f, double r, double gamma) {
    // Fourth-order central differences.
    const double f0 = f(r, gamma);
    const double rp1 = f(r + h, gamma), rm1 = f(r - h, gamma), rp2 = f(r + 2 * h, gamma), rm2 = f(r - 2 * h, gamma);
    const double gp1 = f(r, gamma + h), gm1 = f(r, gamma - h), gp2 = f(r, gamma + 2 * h), gm2 = f(r, gamma - 2 * h);
    const double fr = (8 * (rp1 - rm1) - (rp2 - rm2)) / (12 * h);
    const double frr = (16 * (rp1 + rm1) - (rp2 + rm2) - 30 * f0) / (12 * h * h);
    const double fg = (8 * (gp1 - gm1) - (gp2 - gm2)) / (12 * h);
    const double fgg = (16 * (gp1 + gm1) - (gp2 + gm2) - 30 * f0) / (12 * h * h);
    const double sh2 = std::sinh(r) * std::sinh(r);
    const double parts[] = {frr, (d - 1) / std::tanh(r) * fr, fgg / sh2, (d - 2) / std::tan(gamma) * fg / sh2};
    double sum = 0.0, mag = 0.0;
    for (double v : parts) {
      sum += v;
      mag += std::fabs(v);
    }
    return std::fabs(sum) / mag;
  };
  double worst = 0.0;
  for (int d = 2; d <= 5; ++d) {
    auto closed = [d](double r, double g) { return greens::I_d(d, geometry::acosh1p(geometry::cosh_rho_m1(r, rp, g))); };
    for (const auto& p : points) worst = std::max(worst, residual(d, closed, p.r, p.gamma));
  }
  for (int d = 3; d <= 5; ++d) {
    auto series = [d](double r, double g) { return gegenbauer::gegenbauer_series(d, 1.0, r, rp, g, 1e-13).value; };
    for (const auto& p : points) worst = std::max(worst, residual(d, series, p.r, p.gamma));
  }
  return finish("gegenbauer", "Laplace-Beltrami residual of I_d and of the series", worst, 1e-4, t);
}

std::vector<CheckResult> check_conjecture() {
  std::vector<CheckResult> out;
  const RadialGeometry geoms[] = {{0.8, 1.3, 1.0}, {0.4, 1.1, 2.2}, {1.5, 0.6, 0.3}};
  for (double mu : {0.3, 0.75, 1.5}) {
    Timer t;
    double worst = 0.0, tail = 0.0;
    for (const auto& g : geoms) {
      const auto c = gegenbauer::conjecture_check(mu, g.r, g.rp, g.gamma, 1e-10);
      worst = std::max(worst, std::fabs(c.lhs - c.rhs.value) / std::fabs(c.lhs));
      tail = std::max(tail, c.rhs.tail_estimate / std::fabs(c.lhs));
    }
    if (!(tail <= 1e-8)) worst = std::max(worst, 1.0);
    out.push_back(finish("gegenbauer", "conjecture support mu=" + fmt("%g", mu), worst, 1e-6, t, 0.0,
                         "CONJECTURE SUPPORT, relative tail " + fmt("%.1e", tail)));
  }
  {
    // Integer-forced cases mu = (d-2)/2: the left side is 2^mu Gamma(mu+1) I_d(rho).
    Timer t;
    double worst = 0.0;
    for (int d = 3; d <= 5; ++d) {
      const double mu = 0.5 * d - 1.0;
      for (const auto& g : geoms) {
        const auto c = gegenbauer::conjecture_check(mu, g.r, g.rp, g.gamma, 1e-12);
        const double rho = geometry::acosh1p(geometry::cosh_rho_m1(g.r, g.rp, g.gamma));
        const double exact = std::exp2(mu) * std::tgamma(mu + 1.0) * greens::I_d(d, rho);
        worst = std::max({worst, rel_dev(c.lhs, exact), rel_dev(c.rhs.value, exact)});
      }
    }
    out.push_back(finish("gegenbauer", "conjecture at mu=(d-2)/2, d=3..5", worst, 1e-9, t));
  }
  {
    Timer t;
    double worst = 0.0;
    for (const auto& g : geoms) {
      const auto c = gegenbauer::conjecture_check(0.0, g.r, g.rp, g.gamma, 1e-12);
      const double rho = geometry::acosh1p(geometry::cosh_rho_m1(g.r, g.rp, g.gamma));
      worst = std::max({worst, rel_dev(c.lhs, greens::I_d(2, rho)), rel_dev(c.rhs.value, greens::I_d(2, rho))});
    }
    out.push_back(finish("gegenbauer", "conjecture mu=0 Chebyshev limit reproduces d=2", worst, 1e-9, t));
  }
  return out;
}

// ---- addition --------------------------------------------------------------

CheckResult check_addition_theorem() {
  Timer t;
  double worst = 0.0;
  for (const auto& g : d3_geometries(505, 15, 1e-3, 0.15, 0.9)) {
    if (gegenbauer::radial_ratio(g.r, g.rp) > 0.95) continue;
    for (int m = 0; m <= 4; ++m) {
      const auto s = gegenbauer::addition_theorem_H3(m, g.r, g.rp, g.theta, g.theta_p, 1e-12);
      worst = std::max(worst, rel_dev(s.value, fourier::fourier_quadrature(3, m, g.ab)));
      if (!s.converged) worst = std::max(worst, 1.0);
    }
  }
  return finish("addition", "d=3 addition theorem vs quadrature, m<=4", worst, 1e-7, t, 15.0);
}

// ---- limits ----------------------------------------------------------------

namespace {
constexpr double kSmallR = 1e-2, kSmallRp = 5e-3, kSmallGamma = 1.0;
double small_dist() {
  return std::sqrt(kSmallR * kSmallR + kSmallRp * kSmallRp - 2 * kSmallR * kSmallRp * std::cos(kSmallGamma));
}
} // namespace

CheckResult check_euclidean_limit_H() {
  Timer t;
  double worst = 0.0;
  for (double gamma : {0.0, 1.0, 2.0, kPi}) {
    const double rho = geometry::acosh1p(geometry::cosh_rho_m1(kSmallR, kSmallRp, gamma));
    const double dist = std::sqrt(kSmallR * kSmallR + kSmallRp * kSmallRp - 2.0 * kSmallR * kSmallRp * std::cos(gamma));
    for (int d = 3; d <= 9; ++d) {
      double dev = greens::fundamental_H_rho(d, 1.0, rho) / greens::euclid_G_dist(d, dist) - 1.0;
      // Leading corrections that are not O(r^2): rho (coth rho - 1) = 1 - rho + ...
      // for d = 3, and 2 rho^2 I_4 = 1 + rho^2 log rho + ... for d = 4.
      if (d == 3) dev += rho;
      if (d == 4) dev -= rho * rho * std::log(rho);
      worst = std::max(worst, std::fabs(dev));
    }
  }
  return finish("limits", "H_R^d / G^d - 1 near the origin (net of the d=3 rho and d=4 rho^2 log rho terms)", worst,
                5e-4, t);
}

CheckResult check_euclidean_limit_series() {
  Timer t;
  const double rho = geometry::acosh1p(geometry::cosh_rho_m1(kSmallR, kSmallRp, kSmallGamma));
  const auto s = gegenbauer::gegenbauer_series(3, 1.0, kSmallR, kSmallRp, kSmallGamma, 1e-12);
  const double g = greens::euclid_G_dist(3, small_dist());
  const double e = gegenbauer::euclid_gegenbauer(3, kSmallR, kSmallRp, kSmallGamma, 60) / (4.0 * kPi);
  double worst = std::max(std::fabs(s.value / g - 1.0 + rho), std::fabs(e / g - 1.0));
  // Termwise for l >= 1: (2l+1) P Qhat / sqrt(sinh r sinh r') against r_<^l / r_>^{l+1}.
  const auto p = gegenbauer::radial_products(3, kSmallR, kSmallRp, 10);
  const double rl = std::min(kSmallR, kSmallRp), rg = std::max(kSmallR, kSmallRp);
  for (int l = 1; l <= 10; ++l) {
    const double want = std::pow(rl, l) / std::pow(rg, l + 1);
    worst = std::max(worst, std::fabs(p[l] / std::sqrt(std::sinh(kSmallR) * std::sinh(kSmallRp)) / want - 1.0));
  }
  return finish("limits", "d=3 Gegenbauer series vs Euclidean expansion", worst, 5e-4, t);
}

CheckResult check_euclidean_limit_d2() {
  Timer t;
  double worst = 0.0;
  const double ratio = kSmallRp / kSmallR;
  for (int n = 1; n <= 5; ++n) {
    const double want = std::pow(ratio, n);
    worst = std::max(worst, std::fabs(n * fourier::fourier_d2(n, kSmallR, kSmallRp) - want) / want);
  }
  return finish("limits", "d=2 n*coefficient vs (r_</r_>)^n", worst, 1e-2, t);
}

CheckResult check_euclidean_limit_d3_m0() {
  Timer t;
  const double th = 1.0, thp = 1.3;
  const double h0 = fourier::fourier_d3_elliptic(0, kSmallR, kSmallRp, th, thp);
  const double e = fourier::euclid_g3_m0(kSmallR, kSmallRp, th, thp);
  return finish("limits", "d=3 H_0 + 1 vs Euclidean m=0 coefficient", std::fabs((h0 + 1.0) / e - 1.0), 1e-2, t);
}

// ---- driver ----------------------------------------------------------------

std::vector<CheckResult> run_suite(const std::string& name, double loosen_to, const Reporter& report) {
  if (!is_suite(name)) throw DomainError("unknown suite '" + name + "'");
  std::vector<CheckResult> out;
  auto emit = [&](CheckResult r) {
    if (loosen_to > r.threshold) {
      r.threshold = loosen_to;
      r.passed = std::isfinite(r.measured) && r.measured <= r.threshold &&
                 (r.time_limit <= 0.0 || r.seconds <= r.time_limit);
    }
    if (report) report(r);
    out.push_back(std::move(r));
  };
  using Group = std::vector<CheckResult> (*)();
  struct Entry {
    const char* suite;
    const char* label;
    Group run;
  };
  static const Entry entries[] = {
      {"representations", "four representations agree", [] { return std::vector{check_representation_equivalence()}; }},
      {"representations", "odd-d finite-sum variants agree", [] { return std::vector{check_odd_dual_forms()}; }},
      {"wronskian", "(z^2-1) W{P^-mu, Qhat^mu} = -1", [] { return std::vector{check_wronskian()}; }},
      {"wronskian", "finite-difference Wronskian", [] { return std::vector{check_wronskian_finite_difference()}; }},
      {"wronskian", "order-recurrence Casoratian", [] { return std::vector{check_order_recurrence_casoratian()}; }},
      {"fourier", "d=3 m=0 elliptic closed form vs quadrature", [] { return std::vector{check_fourier_m0()}; }},
      {"fourier", "d=3 moment-assembled H_m vs quadrature", [] { return std::vector{check_fourier_general_m()}; }},
      {"fourier", "resummed Fourier series vs unit_h", [] { return std::vector{check_fourier_resummation()}; }},
      {"gegenbauer", "Gegenbauer series vs closed form", [] { return std::vector{check_gegenbauer_series()}; }},
      {"gegenbauer", "term ratio beyond l=20", [] { return std::vector{check_gegenbauer_ratio()}; }},
      {"gegenbauer", "derivative jump", [] { return std::vector{check_jump_condition()}; }},
      {"gegenbauer", "Laplace-Beltrami residual", [] { return std::vector{check_harmonicity()}; }},
      {"gegenbauer", "conjecture", [] { return check_conjecture(); }},
      {"addition", "d=3 addition theorem vs quadrature", [] { return std::vector{check_addition_theorem()}; }},
      {"limits", "H_R^d / G^d near the origin", [] { return std::vector{check_euclidean_limit_H()}; }},
      {"limits", "Gegenbauer series vs Euclidean expansion", [] { return std::vector{check_euclidean_limit_series()}; }},
      {"limits", "d=2 coefficients near the origin", [] { return std::vector{check_euclidean_limit_d2()}; }},
      {"limits", "d=3 H_0 + 1 vs Euclidean m=0", [] { return std::vector{check_euclidean_limit_d3_m0()}; }},
  };
  for (const auto& e : entries) {
    if (name != "all" && name != e.suite) continue;
    try {
      for (auto& r : e.run()) emit(std::move(r));
    } catch (const std::exception& ex) {
      CheckResult r;
      r.suite = e.suite;
      r.name = e.label;
      r.measured = std::numeric_limits<double>::infinity();
      r.note = std::string("error: ") + ex.what();
      emit(std::move(r));
    }
  }
  return out;
}

std::string format_result(const CheckResult& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s %s/%s measured=%.3e threshold=%.1e", r.passed ? "PASS" : "FAIL", r.suite.c_str(),
                r.name.c_str(), r.measured, r.threshold);
  std::string s = buf;
  if (r.time_limit > 0.0 && r.seconds > r.time_limit) s += fmt(" time limit %gs exceeded", r.time_limit);
  if (!r.note.empty()) s += " (" + r.note + ")";
  return s;
}

} // namespace hypgreen::validation
