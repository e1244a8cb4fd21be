#include <cmath>
#include <numbers>
#include <vector>

#include "hypgreen/specfun.hpp"

namespace hypgreen::specfun {

namespace {

// Beyond this w = (z-1)/(z+1) the plain series needs thousands of terms and the
// connection formula takes over.
constexpr double kDirectSeriesLimit = 0.99;
constexpr double kCasoratianDrift = 1e-9;

SignedLog log_factor(double log_abs) { return {log_abs, 1}; }

} // namespace

CutArg CutArg::from_cosh(double r) {
  const double sh = std::sinh(0.5 * r);
  return {std::cosh(r), 2.0 * sh * sh};
}

SignedLog legendre_P_log(double nu, double mu, CutArg z) {
  if (!(z.zm1 > 0.0)) throw DomainError("legendre_P: requires z > 1");
  if (is_nonpositive_integer(1.0 - mu)) throw DomainError("legendre_P: 1 - mu must not be a nonpositive integer");
  const double zp1 = z.zm1 + 2.0;
  const double w = z.zm1 / zp1;
  // P_nu^mu(z) = w^{-mu/2} ((z+1)/2)^nu / Gamma(1-mu) 2F1(-nu, -mu-nu; 1-mu; w)
  const SignedLog g = gamma_signed_log(1.0 - mu);
  const SignedLog pref = log_factor(-0.5 * mu * std::log(w) + nu * std::log(0.5 * zp1)) / g;
  const SignedLog f = (w <= kDirectSeriesLimit) ? gauss_2f1_series_log(-nu, -mu - nu, 1.0 - mu, w)
                                                : gauss_2f1_log(-nu, -mu - nu, 1.0 - mu, UnitArg{w, 2.0 / zp1});
  return pref * f;
}

double legendre_P_on_cut(double nu, double mu, double z) {
  if (!(z > 1.0)) throw DomainError("legendre_P: requires z > 1");
  return legendre_P_log(nu, mu, CutArg::from_z(z)).value();
}

SignedLog legendre_Qhat_log(double nu, double mu, CutArg z) {
  if (!(z.zm1 > 0.0)) throw DomainError("legendre_Qhat: requires z > 1");
  if (is_nonpositive_integer(nu + mu + 1.0)) throw DomainError("legendre_Qhat: nu + mu must not be a negative integer");
  if (is_nonpositive_integer(nu + 1.5)) throw DomainError("legendre_Qhat: nu + 3/2 must not be a nonpositive integer");
  // Qhat_nu^mu(z) = sqrt(pi) Gamma(nu+mu+1) (z^2-1)^{mu/2} / (2^{nu+1} z^{nu+mu+1} Gamma(nu+3/2))
  //               * 2F1((nu+mu+2)/2, (nu+mu+1)/2; nu+3/2; 1/z^2)
  const double log_z = std::log(z.z);
  const double log_s2 = std::log(z.zm1) + std::log(z.zm1 + 2.0);
  const double log_pref = 0.5 * std::log(std::numbers::pi) + 0.5 * mu * log_s2 - (nu + 1.0) * std::numbers::ln2 -
                          (nu + mu + 1.0) * log_z;
  const SignedLog pref = log_factor(log_pref) * gamma_signed_log(nu + mu + 1.0) / gamma_signed_log(nu + 1.5);
  const double x = 1.0 / z.z / z.z;
  const double one_minus_x = std::exp(log_s2 - 2.0 * log_z);
  const double a = 0.5 * (nu + mu + 2.0), b = 0.5 * (nu + mu + 1.0), c = nu + 1.5;
  // For large orders c - a - b = -mu and the 1 - x connection cancels badly;
  // the plain series has positive terms there.
  const bool series = x <= kDirectSeriesLimit && (x <= 0.5 || mu > 1.0) && a > 0.0 && b > 0.0;
  const SignedLog f = series ? gauss_2f1_series_log(a, b, c, x) : gauss_2f1_log(a, b, c, UnitArg{x, one_minus_x});
  return pref * f;
}

double legendre_Qhat(double nu, double mu, double z) {
  if (!(z > 1.0)) throw DomainError("legendre_Qhat: requires z > 1");
  return legendre_Qhat_log(nu, mu, CutArg::from_z(z)).value();
}

double casoratian_residual(double mu, CutArg z, SignedLog p_mu, SignedLog p_mu_minus_1, SignedLog q_mu,
                           SignedLog q_mu_plus_1) {
  const SignedLog s = log_factor(0.5 * (std::log(z.zm1) + std::log(z.zm1 + 2.0)));
  const double t1 = (s * p_mu * q_mu_plus_1).value();
  const double t2 = (s * p_mu_minus_1 * q_mu).value();
  const double t3 = (SignedLog::from_double(2.0 * mu * z.z) * p_mu * q_mu).value();
  return -t1 - t2 + t3 + 1.0;
}

std::vector<SignedLog> legendre_Qhat_order_sequence(double nu, CutArg z, int lmax) {
  if (lmax < 0) throw DomainError("legendre_Qhat_order_sequence: lmax must be nonnegative");
  std::vector<SignedLog> q(static_cast<std::size_t>(lmax) + 1);
  q[0] = legendre_Qhat_log(nu, nu, z);
  if (lmax == 0) return q;
  q[1] = legendre_Qhat_log(nu, nu + 1.0, z);
  const SignedLog z_over_s = log_factor(std::log(z.z) - 0.5 * (std::log(z.zm1) + std::log(z.zm1 + 2.0)));
  for (int l = 2; l <= lmax; ++l) {
    // Qhat^{mu+2} = 2 (mu+1) (z/s) Qhat^{mu+1} + (nu-mu)(nu+mu+1) Qhat^mu
    const double mu = nu + l - 2;
    q[l] = SignedLog::from_double(2.0 * (mu + 1.0)) * z_over_s * q[l - 1] +
           SignedLog::from_double((nu - mu) * (nu + mu + 1.0)) * q[l - 2];
    if (l % 10 == 0) {
      const double m1 = nu + l - 1;
      const SignedLog p = legendre_P_log(nu, -m1, z);
      const SignedLog pm = legendre_P_log(nu, -(m1 - 1.0), z);
      const double drift = std::fabs(casoratian_residual(m1, z, p, pm, q[l - 1], q[l]));
      if (!(drift <= kCasoratianDrift)) {
        for (int k = l - 9; k <= l; ++k) q[k] = legendre_Qhat_log(nu, nu + k, z);
      }
    }
  }
  return q;
}

std::vector<SignedLog> legendre_Pminus_order_sequence(double nu, CutArg z, int lmax) {
  if (lmax < 0) throw DomainError("legendre_Pminus_order_sequence: lmax must be nonnegative");
  std::vector<SignedLog> p(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l) p[l] = legendre_P_log(nu, -(nu + l), z);
  return p;
}

} // namespace hypgreen::specfun
