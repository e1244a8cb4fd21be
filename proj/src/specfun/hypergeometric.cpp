#include <cmath>
#include <limits>
#include <string>

#include "hypgreen/specfun.hpp"

namespace hypgreen::specfun {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kEps = 1e-17;
constexpr double kRescale = 1e200;
const double kLogRescale = std::log(kRescale);

SignedLog inv_gamma(double x) {
  const SignedLog g = gamma_signed_log(x);
  if (g.is_zero()) return SignedLog::zero();
  return {-g.log_abs, g.sign};
}

SignedLog power_of(double base, double exponent) {
  // base > 0
  return {exponent * std::log(base), 1};
}

// sum_k (a)_k (b)_k / ((c)_k k!) x^k, summed until the terms are negligible.
SignedLog power_series(double a, double b, double c, double x) {
  double term = 1.0;
  double sum = 1.0;
  double log_scale = 0.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double den = (c + k) * (k + 1);
    if (den == 0.0) throw DomainError("gauss_2f1: c is a nonpositive integer");
    const double ratio = (a + k) * (b + k) / den * x;
    term *= ratio;
    sum += term;
    if (term == 0.0) return SignedLog::from_double(sum) * SignedLog{log_scale, 1};
    if (std::fabs(term) <= kEps * std::fabs(sum) && std::fabs(ratio) < 1.0) {
      return SignedLog::from_double(sum) * SignedLog{log_scale, 1};
    }
    if (std::fabs(sum) > kRescale || std::fabs(term) > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      log_scale += kLogRescale;
    }
  }
  throw ConvergenceError("gauss_2f1: power series did not converge");
}

// c = a + b + m, m >= 0 (DLMF 15.8.10 / A&S 15.3.10-11), y = 1 - x in (0, 1/2].
SignedLog log_case_c_above(double a, double b, int m, double y) {
  const double c = a + b + m;
  const double log_y = std::log(y);
  SignedLog result = SignedLog::zero();

  if (m > 0) {
    // Gamma(m) Gamma(c) / (Gamma(a+m) Gamma(b+m)) sum_{n<m} (a)_n (b)_n / (n! (1-m)_n) y^n
    double t = 1.0, s = 1.0;
    for (int n = 0; n + 1 < m; ++n) {
      t *= (a + n) * (b + n) / ((n + 1) * (1.0 - m + n)) * y;
      s += t;
    }
    const SignedLog pref = gamma_signed_log(m) * gamma_signed_log(c) * inv_gamma(a + m) * inv_gamma(b + m);
    result = result + pref * SignedLog::from_double(s);
  }

  // -(-1)^m y^m Gamma(c) / (Gamma(a) Gamma(b)) sum_n (a+m)_n (b+m)_n / (n! (n+m)!) y^n
  //   * [ln y - psi(n+1) - psi(n+m+1) + psi(a+n+m) + psi(b+n+m)]
  double psi_n1 = digamma(1.0);
  double psi_nm1 = digamma(m + 1.0);
  double psi_a = digamma(a + m);
  double psi_b = digamma(b + m);
  double t = 1.0;  // scaled by m!
  double s = 0.0;
  int n = 0;
  for (; n < kMaxTerms; ++n) {
    const double bracket = log_y - psi_n1 - psi_nm1 + psi_a + psi_b;
    const double contrib = t * bracket;
    s += contrib;
    if (n > 2 && std::fabs(contrib) <= kEps * std::fabs(s) && std::fabs(t) <= kEps * std::fabs(s)) break;
    t *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0)) * y;
    psi_n1 += 1.0 / (n + 1.0);
    psi_nm1 += 1.0 / (n + m + 1.0);
    psi_a += 1.0 / (a + m + n);
    psi_b += 1.0 / (b + m + n);
  }
  if (n == kMaxTerms) throw ConvergenceError("gauss_2f1: logarithmic connection series did not converge");
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;
  const SignedLog pref = power_of(y, m) * gamma_signed_log(c) * inv_gamma(a) * inv_gamma(b) *
                         inv_gamma(m + 1.0) * SignedLog::from_double(sign);
  return result + pref * SignedLog::from_double(s);
}

// c = a + b - m, m >= 1 (A&S 15.3.12), y = 1 - x in (0, 1/2].
SignedLog log_case_c_below(double a, double b, int m, double y) {
  const double c = a + b - m;
  const double log_y = std::log(y);

  // Gamma(m) Gamma(c) / (Gamma(a) Gamma(b)) y^{-m} sum_{n<m} (a-m)_n (b-m)_n / (n! (1-m)_n) y^n
  double t = 1.0, s = 1.0;
  for (int n = 0; n + 1 < m; ++n) {
    t *= (a - m + n) * (b - m + n) / ((n + 1) * (1.0 - m + n)) * y;
    s += t;
  }
  SignedLog result = gamma_signed_log(m) * gamma_signed_log(c) * inv_gamma(a) * inv_gamma(b) *
                     power_of(y, -m) * SignedLog::from_double(s);

  // -(-1)^m Gamma(c) / (Gamma(a-m) Gamma(b-m)) sum_n (a)_n (b)_n / (n! (n+m)!) y^n
  //   * [ln y - psi(n+1) - psi(n+m+1) + psi(a+n) + psi(b+n)]
  const SignedLog pref_log = gamma_signed_log(c) * inv_gamma(a - m) * inv_gamma(b - m) * inv_gamma(m + 1.0);
  if (pref_log.is_zero()) return result;
  double psi_n1 = digamma(1.0);
  double psi_nm1 = digamma(m + 1.0);
  double psi_a = digamma(a);
  double psi_b = digamma(b);
  t = 1.0;  // scaled by m!
  s = 0.0;
  int n = 0;
  for (; n < kMaxTerms; ++n) {
    const double bracket = log_y - psi_n1 - psi_nm1 + psi_a + psi_b;
    const double contrib = t * bracket;
    s += contrib;
    if (n > 2 && std::fabs(contrib) <= kEps * std::fabs(s) && std::fabs(t) <= kEps * std::fabs(s)) break;
    t *= (a + n) * (b + n) / ((n + 1.0) * (n + m + 1.0)) * y;
    psi_n1 += 1.0 / (n + 1.0);
    psi_nm1 += 1.0 / (n + m + 1.0);
    psi_a += 1.0 / (a + n);
    psi_b += 1.0 / (b + n);
  }
  if (n == kMaxTerms) throw ConvergenceError("gauss_2f1: logarithmic connection series did not converge");
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;
  return result + pref_log * SignedLog::from_double(sign * s);
}

// Non-integer c - a - b (DLMF 15.8.4 at z -> 1 - z).
SignedLog generic_connection(double a, double b, double c, double y) {
  const double s = c - a - b;
  const SignedLog t1 = gamma_signed_log(c) * gamma_signed_log(s) * inv_gamma(c - a) * inv_gamma(c - b);
  const SignedLog t2 = gamma_signed_log(c) * gamma_signed_log(-s) * inv_gamma(a) * inv_gamma(b) * power_of(y, s);
  SignedLog result = SignedLog::zero();
  if (!t1.is_zero()) result = result + t1 * power_series(a, b, 1.0 - s, y);
  if (!t2.is_zero()) result = result + t2 * power_series(c - a, c - b, 1.0 + s, y);
  return result;
}

double snap_integer(double v) {
  return std::fabs(v - std::round(v)) < 1e-12 ? std::round(v) : v;
}

} // namespace

SignedLog gauss_2f1_log(double a, double b, double c, UnitArg arg) {
  a = snap_integer(a);
  b = snap_integer(b);
  c = snap_integer(c);
  const double x = arg.x;
  const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (is_nonpositive_integer(c)) {
    const double na = is_nonpositive_integer(a) ? -a : std::numeric_limits<double>::infinity();
    const double nb = is_nonpositive_integer(b) ? -b : std::numeric_limits<double>::infinity();
    if (std::min(na, nb) > -c) throw DomainError("gauss_2f1: c is a nonpositive integer");
  }
  if (x == 0.0 || a == 0.0 || b == 0.0) return SignedLog::from_double(1.0);
  if (terminating) return power_series(a, b, c, x);
  if (!(x > 0.0) || !(x < 1.0)) throw DomainError("gauss_2f1: argument must lie in [0, 1)");
  if (x <= 0.5) return power_series(a, b, c, x);

  const double y = arg.one_minus_x;
  if (!(y > 0.0)) throw DomainError("gauss_2f1: 1 - x must be positive");
  const double s = c - a - b;
  const double sr = std::round(s);
  if (std::fabs(s - sr) < 1e-12) {
    const int m = static_cast<int>(sr);
    return m >= 0 ? log_case_c_above(a, b, m, y) : log_case_c_below(a, b, -m, y);
  }
  return generic_connection(a, b, c, y);
}

SignedLog gauss_2f1_series_log(double a, double b, double c, double x) {
  if (!(x >= 0.0) || !(x < 1.0)) throw DomainError("gauss_2f1: argument must lie in [0, 1)");
  if (x == 0.0) return SignedLog::from_double(1.0);
  return power_series(snap_integer(a), snap_integer(b), snap_integer(c), x);
}

double gauss_2f1(double a, double b, double c, double x) {
  return gauss_2f1_log(a, b, c, UnitArg::from_x(x)).value();
}

} // namespace hypgreen::specfun
