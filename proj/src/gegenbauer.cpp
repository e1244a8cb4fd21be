#include "hypgreen/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "hypgreen/errors.hpp"
#include "hypgreen/geometry.hpp"
#include "hypgreen/specfun.hpp"

namespace hypgreen::gegenbauer {

namespace {

constexpr int kMinTerms = 8;
constexpr int kFirstChunk = 64;
constexpr double kDiagonalRatio = 0.999;

using specfun::CutArg;
using hypgreen::SignedLog;

void check_dim(int d) {
  if (d < 3) throw DomainError("Gegenbauer expansion requires d >= 3");
}

void check_radii(double r, double r_prime) {
  if (!std::isfinite(r) || !std::isfinite(r_prime) || !(r > 0.0) || !(r_prime > 0.0)) {
    throw DomainError("radii must be positive and finite");
  }
}

void check_gamma(double gamma) {
  if (!(gamma >= 0.0) || !(gamma <= std::numbers::pi)) throw DomainError("gamma must lie in [0, pi]");
}

// P_nu^{-(nu+l)}(cosh r_<) Qhat_nu^{nu+l}(cosh r_>) for l = 0..lmax.
std::vector<double> legendre_products(double nu, double r, double r_prime, int lmax) {
  const CutArg lo = CutArg::from_cosh(std::min(r, r_prime));
  const CutArg hi = CutArg::from_cosh(std::max(r, r_prime));
  const auto p = specfun::legendre_Pminus_order_sequence(nu, lo, lmax);
  const auto q = specfun::legendre_Qhat_order_sequence(nu, hi, lmax);
  std::vector<double> out(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) out[l] = (p[l] * q[l]).value();
  return out;
}

// Radial factors (without the polynomial) and polynomial values for k = 0..n.
using Radial = std::function<std::vector<double>(int n)>;
using Angular = std::function<std::vector<double>(int n)>;

// Smooth step from 1 (x <= 1/2) to 0 (x >= 1).
double cutoff_weight(double x) {
  if (x <= 0.5) return 1.0;
  if (x >= 1.0) return 0.0;
  const double y = 2.0 * x - 1.0;
  const double a = std::exp(-1.0 / (1.0 - y));
  const double b = std::exp(-1.0 / y);
  return a / (a + b);
}

class Kahan {
public:
  void add(double v) {
    const double y = v - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  [[nodiscard]] double sum() const { return s_; }

private:
  double s_ = 0.0, c_ = 0.0;
};

SeriesEval geometric_sum(const Radial& radial, const Angular& angular, double q_analytic, double tol,
                         int max_terms) {
  SeriesEval out;
  int n = std::min(kFirstChunk, max_terms - 1);
  for (;;) {
    const auto rad = radial(n);
    const auto ang = angular(n);
    Kahan s;
    for (int k = 0; k <= n; ++k) {
      const double t = rad[k] * ang[k];
      s.add(t);
      out.value = s.sum();
      out.terms_used = k + 1;
      if (k + 1 < kMinTerms) continue;
      // Ratio: analytic, radial, and the full-term ratio when it is not a zero-crossing artifact.
      double q = q_analytic;
      if (rad[k - 1] != 0.0) q = std::max(q, std::fabs(rad[k] / rad[k - 1]));
      const double prev = rad[k - 1] * ang[k - 1];
      if (prev != 0.0 && std::fabs(t / prev) < 1.0) q = std::max(q, std::fabs(t / prev));
      const double window = std::max({std::fabs(t), std::fabs(prev), std::fabs(rad[k - 2] * ang[k - 2])});
      if (q >= 1.0) {
        out.tail_estimate = std::numeric_limits<double>::infinity();
        continue;
      }
      out.tail_estimate = window * q / (1.0 - q);
      if (out.tail_estimate <= tol * std::fabs(out.value)) {
        out.converged = true;
        return out;
      }
    }
    if (n >= max_terms - 1) return out;
    n = std::min(2 * n, max_terms - 1);
  }
}

// Terms without geometric decay: smooth-cutoff sums at L and L/2.
SeriesEval cutoff_sum(const Radial& radial, const Angular& angular, double tol, int max_terms) {
  SeriesEval out;
  auto smoothed = [&](const std::vector<double>& rad, const std::vector<double>& ang, int L) {
    Kahan s;
    for (int k = 0; k < L; ++k) s.add(cutoff_weight(static_cast<double>(k) / L) * rad[k] * ang[k]);
    return s.sum();
  };
  int L = std::min(512, max_terms);
  for (;;) {
    const auto rad = radial(L);
    const auto ang = angular(L);
    const double full = smoothed(rad, ang, L);
    const double half = smoothed(rad, ang, L / 2);
    out.value = full;
    out.terms_used = L;
    out.tail_estimate = std::fabs(full - half);
    if (out.tail_estimate <= tol * std::fabs(full)) {
      out.converged = true;
      return out;
    }
    if (L >= max_terms) return out;
    L = std::min(2 * L, max_terms);
  }
}

Angular gegenbauer_angular(double mu, double x) {
  return [=](int n) {
    std::vector<double> c;
    specfun::gegenbauer_C_sequence(n, mu, x, c);
    return c;
  };
}

// (l-m)!/(l+m)! P_l^m(x) P_l^m(y) for l = m..m+n, indexed by l - m.
std::vector<double> legendre_pair_products(int m, double x, double y, int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  double px0 = specfun::assoc_legendre_Plm(m, m, x), py0 = specfun::assoc_legendre_Plm(m, m, y);
  double px1 = 0.0, py1 = 0.0;
  double ratio = 1.0;  // (l-m)!/(l+m)!
  for (int i = 1; i <= 2 * m; ++i) ratio /= i;
  for (int k = 0; k <= n; ++k) {
    const int l = m + k;
    if (k > 0) ratio *= static_cast<double>(l - m) / (l + m);
    double px, py;
    if (k == 0) {
      px = px0;
      py = py0;
    } else if (k == 1) {
      px1 = x * (2.0 * m + 1.0) * px0;
      py1 = y * (2.0 * m + 1.0) * py0;
      px = px1;
      py = py1;
    } else {
      px = (x * (2.0 * l - 1.0) * px1 - (l + m - 1.0) * px0) / (l - m);
      py = (y * (2.0 * l - 1.0) * py1 - (l + m - 1.0) * py0) / (l - m);
      px0 = px1;
      py0 = py1;
      px1 = px;
      py1 = py;
    }
    out[k] = ratio * px * py;
  }
  return out;
}

} // namespace

double radial_ratio(double r, double r_prime) {
  check_radii(r, r_prime);
  return std::tanh(0.5 * std::min(r, r_prime)) / std::tanh(0.5 * std::max(r, r_prime));
}

double radial_ul(int d, double R, int l, double r, double r_prime) {
  check_dim(d);
  check_radii(r, r_prime);
  if (l < 0) throw DomainError("radial_ul: l must be nonnegative");
  if (!(R > 0.0)) throw DomainError("radial_ul: R must be positive");
  const double nu = 0.5 * d - 1.0;
  const CutArg lo = CutArg::from_cosh(std::min(r, r_prime));
  const CutArg hi = CutArg::from_cosh(std::max(r, r_prime));
  const SignedLog pq = specfun::legendre_P_log(nu, -(nu + l), lo) * specfun::legendre_Qhat_log(nu, nu + l, hi);
  const SignedLog denom{(d - 2) * std::log(R) + nu * std::log(std::sinh(r) * std::sinh(r_prime)), 1};
  return (pq / denom).value();
}

double discontinuity_check(int d, double R, int l, double r_prime) {
  check_dim(d);
  if (!(r_prime > 0.0) || !std::isfinite(r_prime)) throw DomainError("discontinuity_check: r' must be positive");
  if (l < 0) throw DomainError("discontinuity_check: l must be nonnegative");
  if (!(R > 0.0)) throw DomainError("discontinuity_check: R must be positive");
  const double nu = 0.5 * d - 1.0;
  const double mu = nu + l;
  const CutArg zp = CutArg::from_cosh(r_prime);
  const double p_fixed = specfun::legendre_P_log(nu, -mu, zp).value();
  const double q_fixed = specfun::legendre_Qhat_log(nu, mu, zp).value();
  const double scale = std::pow(R, 2 - d);
  // v = (sinh r sinh r')^{(d-1)/2} u_l on each side of r = r'.
  auto v_above = [&](double r) {
    return scale * std::sqrt(std::sinh(r) * std::sinh(r_prime)) * p_fixed *
           specfun::legendre_Qhat_log(nu, mu, CutArg::from_cosh(r)).value();
  };
  auto v_below = [&](double r) {
    return scale * std::sqrt(std::sinh(r) * std::sinh(r_prime)) * q_fixed *
           specfun::legendre_P_log(nu, -mu, CutArg::from_cosh(r)).value();
  };
  const double h = std::min(1e-3, 0.1 * r_prime);
  auto derivative = [&](const auto& f) {
    return (f(r_prime - 2.0 * h) - 8.0 * f(r_prime - h) + 8.0 * f(r_prime + h) - f(r_prime + 2.0 * h)) / (12.0 * h);
  };
  return derivative(v_above) - derivative(v_below);
}

std::vector<double> radial_products(int d, double r, double r_prime, int lmax) {
  check_dim(d);
  check_radii(r, r_prime);
  if (lmax < 0) throw DomainError("radial_products: lmax must be nonnegative");
  auto p = legendre_products(0.5 * d - 1.0, r, r_prime, lmax);
  for (int l = 0; l <= lmax; ++l) p[l] *= 2.0 * l + d - 2.0;
  return p;
}

SeriesEval gegenbauer_series(int d, double R, double r, double r_prime, double gamma, double tol, int max_terms) {
  check_dim(d);
  check_radii(r, r_prime);
  check_gamma(gamma);
  if (!(R > 0.0)) throw DomainError("gegenbauer_series: R must be positive");
  if (!(tol > 0.0)) throw DomainError("gegenbauer_series: tol must be positive");
  if (max_terms < kMinTerms) throw DomainError("gegenbauer_series: max_terms must be at least 8");
  const double nu = 0.5 * d - 1.0;
  const double q = radial_ratio(r, r_prime);
  if (q >= kDiagonalRatio && gamma == 0.0) {
    throw SingularityError("gegenbauer_series: r = r' and gamma = 0 is the source point");
  }
  const Radial radial = [&](int n) { return radial_products(d, r, r_prime, n); };
  const Angular angular = gegenbauer_angular(nu, std::cos(gamma));
  SeriesEval s = (q < kDiagonalRatio) ? geometric_sum(radial, angular, q, tol, max_terms)
                                       : cutoff_sum(radial, angular, tol, max_terms);
  const double pref = std::tgamma(0.5 * d) /
                      (2.0 * std::pow(std::numbers::pi, 0.5 * d) * std::pow(R, d - 2) * (d - 2.0) *
                       std::pow(std::sinh(r) * std::sinh(r_prime), nu));
  s.value *= pref;
  s.tail_estimate *= pref;
  return s;
}

SeriesEval addition_theorem_H3(int m, double r, double r_prime, double theta, double theta_p, double tol,
                               int max_terms) {
  if (m < 0) throw DomainError("addition_theorem_H3: m must be nonnegative");
  check_radii(r, r_prime);
  check_gamma(theta);
  check_gamma(theta_p);
  if (!(tol > 0.0)) throw DomainError("addition_theorem_H3: tol must be positive");
  if (max_terms < kMinTerms) throw DomainError("addition_theorem_H3: max_terms must be at least 8");
  const double x = std::cos(theta), y = std::cos(theta_p);
  if (m > 0 && (std::sin(theta) == 0.0 || std::sin(theta_p) == 0.0)) return {0.0, 0, 0.0, true};
  const double q = radial_ratio(r, r_prime);
  const double pref = specfun::neumann_eps(m) / std::sqrt(std::sinh(r) * std::sinh(r_prime));
  if (q > kDiagonalRatio) {
    SeriesEval s;
    s.tail_estimate = std::numeric_limits<double>::infinity();
    return s;
  }
  const Radial radial = [&](int n) {
    auto p = legendre_products(0.5, r, r_prime, m + n);
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[k] = (2.0 * (m + k) + 1.0) * p[m + k];
    return out;
  };
  const Angular angular = [&](int n) { return legendre_pair_products(m, x, y, n); };
  SeriesEval s = geometric_sum(radial, angular, q, tol, max_terms);
  s.value *= pref;
  s.tail_estimate *= pref;
  return s;
}

double euclid_gegenbauer(int d, double r, double r_prime, double gamma, int lmax) {
  check_dim(d);
  check_radii(r, r_prime);
  check_gamma(gamma);
  if (lmax < 0) throw DomainError("euclid_gegenbauer: lmax must be nonnegative");
  const double rl = std::min(r, r_prime), rg = std::max(r, r_prime);
  if (rl == rg && gamma == 0.0) throw SingularityError("euclid_gegenbauer: coincident points");
  std::vector<double> c;
  specfun::gegenbauer_C_sequence(lmax, 0.5 * d - 1.0, std::cos(gamma), c);
  const double t = rl / rg;
  Kahan s;
  double tl = std::pow(rg, 2 - d);
  for (int l = 0; l <= lmax; ++l) {
    s.add(tl * c[l]);
    tl *= t;
  }
  return s.sum();
}

ConjectureResult conjecture_check(double mu, double r, double r_prime, double gamma, double tol, int max_terms) {
  if (!(mu > -0.5) || !std::isfinite(mu)) throw DomainError("conjecture_check: mu must exceed -1/2");
  check_radii(r, r_prime);
  check_gamma(gamma);
  if (!(tol > 0.0)) throw DomainError("conjecture_check: tol must be positive");
  if (max_terms < kMinTerms) throw DomainError("conjecture_check: max_terms must be at least 8");
  const double t = geometry::cosh_rho_m1(r, r_prime, gamma);
  if (!(t > 0.0)) throw SingularityError("conjecture_check: coincident points");
  const double q = radial_ratio(r, r_prime);
  ConjectureResult res;
  const double x = std::cos(gamma);
  auto sum = [&](const Radial& radial, const Angular& angular) {
    return (q < kDiagonalRatio) ? geometric_sum(radial, angular, q, tol, max_terms)
                                : cutoff_sum(radial, angular, tol, max_terms);
  };

  if (std::fabs(mu) < 1e-12) {
    res.chebyshev_limit = true;
    // Q_0(z) = (1/2) log((z+1)/(z-1)) at z = cosh rho.
    res.lhs = 0.5 * std::log1p(2.0 / t);
    const double tl = std::tanh(0.5 * std::min(r, r_prime));
    const double tg = std::tanh(0.5 * std::max(r, r_prime));
    const double zg = std::cosh(std::max(r, r_prime));
    // eps_n P_0^{-n}(z_<) Qhat_0^n(z_>), with P_0^{-n} = tanh^n(r_</2)/n! and
    // Qhat_0^n = (n-1)!/2 [tanh^{-n}(r_>/2) - tanh^n(r_>/2)].
    const Radial radial = [=](int n) {
      std::vector<double> out(static_cast<std::size_t>(n) + 1);
      out[0] = 0.5 * std::log((zg + 1.0) / (zg - 1.0));
      for (int k = 1; k <= n; ++k) out[k] = (std::pow(tl / tg, k) - std::pow(tl * tg, k)) / k;
      return out;
    };
    const Angular angular = [=](int n) {
      std::vector<double> out(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) out[k] = std::cos(k * std::acos(std::clamp(x, -1.0, 1.0)));
      return out;
    };
    res.rhs = sum(radial, angular);
    return res;
  }

  const SignedLog qhat = specfun::legendre_Qhat_log(mu, mu, CutArg{1.0 + t, t});
  const double sinh_rho = std::sqrt(t * (t + 2.0));
  res.lhs = (qhat / SignedLog{mu * std::log(sinh_rho), 1}).value();
  const Radial radial = [=](int n) {
    auto p = legendre_products(mu, r, r_prime, n);
    for (int k = 0; k <= n; ++k) p[k] *= (k + mu) / mu;
    return p;
  };
  res.rhs = sum(radial, gegenbauer_angular(mu, x));
  const double pref = std::exp(mu * std::numbers::ln2 + std::lgamma(mu + 1.0) -
                               mu * std::log(std::sinh(r) * std::sinh(r_prime)));
  res.rhs.value *= pref;
  res.rhs.tail_estimate *= pref;
  return res;
}

} // namespace hypgreen::gegenbauer
