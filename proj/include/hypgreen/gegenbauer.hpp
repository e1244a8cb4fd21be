#pragma once

// Expansion of the fundamental solution in Gegenbauer polynomials of cos(gamma)
// with radial coefficients built from associated Legendre functions, in the
// real form (phases absorbed into Qhat). Also the d = 3 single-sum addition
// theorem for the azimuthal Fourier coefficients and the general-mu conjecture.

#include <vector>

#include "hypgreen/series.hpp"

namespace hypgreen::gegenbauer {

/// u_l(r, r') = Qhat_nu^{nu+l}(cosh r_>) P_nu^{-(nu+l)}(cosh r_<) / (R^{d-2} (sinh r sinh r')^nu),
/// nu = d/2 - 1. DomainError for d < 3 or r r' = 0.
double radial_ul(int d, double R, int l, double r, double r_prime);

/// Jump of d/dr [(sinh r sinh r')^{(d-1)/2} u_l] across r = r', taken as the
/// difference of the one-sided derivatives (central differences on each smooth
/// branch, i.e. the epsilon -> 0 limit). Should equal -1/R^{d-2}.
double discontinuity_check(int d, double R, int l, double r_prime);

/// (2 l + d - 2) P_nu^{-(nu+l)}(cosh r_<) Qhat_nu^{nu+l}(cosh r_>) for l = 0..lmax.
/// Its ratio tends to tanh(r_</2) / tanh(r_>/2).
std::vector<double> radial_products(int d, double r, double r_prime, int lmax);

/// tanh(r_</2) / tanh(r_>/2), the geometric decay ratio of the radial products.
double radial_ratio(double r, double r_prime);

/// Partial sums of the expansion of H_R^d until the tail estimate drops below
/// tol * |value| (at least 8 terms). For r = r' the terms do not decay
/// geometrically; the sum is then taken with a smooth cutoff at L and L/2
/// terms and their difference reported as the tail. r = r' with gamma = 0 is a
/// SingularityError.
SeriesEval gegenbauer_series(int d, double R, double r, double r_prime, double gamma, double tol = 1e-10,
                             int max_terms = 20000);

/// H_m for d = 3 from the single sum over l >= m of
///   eps_m (2l+1) (l-m)!/(l+m)! P_l^m(cos theta) P_l^m(cos theta') P Qhat / sqrt(sinh r sinh r').
/// converged = false when the decay ratio exceeds 0.999 or max_terms is reached.
SeriesEval addition_theorem_H3(int m, double r, double r_prime, double theta, double theta_p, double tol = 1e-10,
                               int max_terms = 20000);

/// sum_{l <= lmax} r_<^l / r_>^{l+d-2} C_l^{d/2-1}(cos gamma).
double euclid_gegenbauer(int d, double r, double r_prime, double gamma, int lmax);

struct ConjectureResult {
  double lhs = 0.0;
  SeriesEval rhs;
  bool chebyshev_limit = false;  // mu = 0 was evaluated through the T_n closed forms
};

/// Both sides of the conjectured general-mu expansion
///   Qhat_mu^mu(cosh rho) / sinh^mu rho
///     = 2^mu Gamma(mu+1) / (sinh r sinh r')^mu
///       * sum_n ((n+mu)/mu) P_mu^{-(mu+n)}(cosh r_<) Qhat_mu^{mu+n}(cosh r_>) C_n^mu(cos gamma).
/// This is a numerical check of an unproven identity; nothing is asserted.
/// |mu| < 1e-12 uses the Chebyshev limit with elementary P_0^{-n}, Q_0, Q_0^n.
ConjectureResult conjecture_check(double mu, double r, double r_prime, double gamma, double tol = 1e-10,
                                  int max_terms = 20000);

} // namespace hypgreen::gegenbauer
