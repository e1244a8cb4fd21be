#pragma once

// Special-function kernel: Gauss hypergeometric 2F1, Chebyshev / Gegenbauer /
// associated Legendre polynomials, and associated Legendre functions of real
// degree and order on the ray z > 1.
//
// Second-kind functions are always the real renormalization
//   Qhat_nu^mu(z) := exp(-i pi mu) Q_nu^mu(z),   z > 1,
// so no complex arithmetic appears anywhere in the library.

#include <vector>

#include "hypgreen/elliptic.hpp"
#include "hypgreen/signed_log.hpp"

namespace hypgreen::specfun {

// ---- elementary ----------------------------------------------------------

/// Neumann factor: 1 for n == 0, 2 otherwise.
int neumann_eps(int n);

/// n!! with (-1)!! = 0!! = 1. Throws DomainError for n < -1.
double double_factorial(int n);

/// Rising factorial (a)_k.
double pochhammer(double a, int k);

/// Gamma(x); DomainError at nonpositive integers.
double gamma_fn(double x);

/// 1 / Gamma(x), zero at the poles of Gamma.
double rgamma(double x);

/// log|Gamma(x)| with the sign of Gamma(x). Poles map to zero().
/// Used as a multiplicative factor, so 1/Gamma is obtained by inverting.
SignedLog gamma_signed_log(double x);

/// Digamma psi(x); DomainError at nonpositive integers.
double digamma(double x);

/// True when x is within 1e-12 of an integer <= 0.
bool is_nonpositive_integer(double x);

// ---- Gauss hypergeometric -------------------------------------------------

/// Argument of 2F1 carried together with 1 - x, so callers near x = 1 can
/// supply the complement without cancellation.
struct UnitArg {
  double x;
  double one_minus_x;
  static UnitArg from_x(double x) { return {x, 1.0 - x}; }
};

/// 2F1(a, b; c; x) for x in [0, 1). Power series for x <= 1/2; otherwise the
/// 1 - x connection formulas, including the logarithmic cases where c - a - b
/// is an integer. Terminating series (a or b a nonpositive integer) are summed
/// exactly for any x.
double gauss_2f1(double a, double b, double c, double x);

/// Same as gauss_2f1, returned in log form so that large parameters do not overflow.
SignedLog gauss_2f1_log(double a, double b, double c, UnitArg arg);

/// Plain power series for 0 <= x < 1, no transformation. Slow as x -> 1 but
/// free of the cancellation the connection formulas suffer for large b, c.
SignedLog gauss_2f1_series_log(double a, double b, double c, double x);

// ---- orthogonal polynomials -----------------------------------------------

/// Chebyshev T_n(x), |x| <= 1, by three-term recurrence.
double chebyshev_T(int n, double x);

/// Gegenbauer C_l^mu(x), mu > -1/2, |x| <= 1.
double gegenbauer_C(int l, double mu, double x);

/// Fills out[0..lmax] with C_l^mu(x).
void gegenbauer_C_sequence(int lmax, double mu, double x, std::vector<double>& out);

/// Legendre polynomial P_l(x) = C_l^{1/2}(x).
double legendre_P(int l, double x);

/// Ferrers function P_l^m(x) on [-1, 1] including the Condon-Shortley phase
/// (-1)^m. Negative m follows P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
/// Returns 0 when |m| > l.
double assoc_legendre_Plm(int l, int m, double x);

// ---- Legendre functions on z > 1 ------------------------------------------

/// Argument z > 1 carried with z - 1 so that points near z = 1 (small
/// geodesic radii, z = cosh r) keep full relative precision.
struct CutArg {
  double z;
  double zm1;
  static CutArg from_z(double z) { return {z, z - 1.0}; }
  /// z = cosh r, z - 1 = 2 sinh^2(r/2).
  static CutArg from_cosh(double r);
};

/// P_nu^mu(z), z > 1. Requires 1 - mu not a nonpositive integer.
double legendre_P_on_cut(double nu, double mu, double z);
SignedLog legendre_P_log(double nu, double mu, CutArg z);

/// Qhat_nu^mu(z) = exp(-i pi mu) Q_nu^mu(z), z > 1, mu >= 0, nu + mu not a
/// negative integer. Throws ConvergenceError if the value overflows.
double legendre_Qhat(double nu, double mu, double z);
SignedLog legendre_Qhat_log(double nu, double mu, CutArg z);

/// Qhat_nu^{nu+l}(z) for l = 0..lmax by upward order recurrence from two
/// directly evaluated seeds. Every tenth order the recurrence is certified
/// against the Wronskian of (P_nu^{-mu}, Qhat_nu^mu) written with adjacent
/// orders; drift above 1e-9 reseeds from direct evaluation.
std::vector<SignedLog> legendre_Qhat_order_sequence(double nu, CutArg z, int lmax);

/// P_nu^{-(nu+l)}(z) for l = 0..lmax (direct evaluation per order).
std::vector<SignedLog> legendre_Pminus_order_sequence(double nu, CutArg z, int lmax);

/// Residual (z^2-1) W + 1 of the adjacent-order Wronskian identity
///   -s [P^{-mu} Q^{mu+1} + P^{-mu+1} Q^mu] + 2 mu z P^{-mu} Q^mu = -1,
/// s = sqrt(z^2-1). Inputs are P_nu^{-mu}, P_nu^{-mu+1}, Qhat^mu, Qhat^{mu+1}.
double casoratian_residual(double mu, CutArg z, SignedLog p_mu, SignedLog p_mu_minus_1,
                           SignedLog q_mu, SignedLog q_mu_plus_1);

} // namespace hypgreen::specfun
