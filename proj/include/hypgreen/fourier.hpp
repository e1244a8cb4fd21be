#pragma once

// Azimuthal Fourier coefficients H_m of the unnormalized fundamental solution
// h^d on the unit hyperboloid in standard geodesic polar coordinates,
//   h^d = sum_m cos(m psi) H_m,   psi = phi - phi',
//   H_m = (eps_m / pi) int_0^pi h^d(A - B cos psi) cos(m psi) dpsi.

#include <string>
#include <vector>

#include "hypgreen/geometry.hpp"
#include "hypgreen/greens.hpp"
#include "hypgreen/series.hpp"

namespace hypgreen::fourier {

enum class Method { closed_d2, quadrature, elliptic_d3 };

const char* method_name(Method m);
Method parse_method(const std::string& name);

// ---- d = 2 -----------------------------------------------------------------

/// Closed-form coefficient of cos(n psi) for h^2 = log coth(rho/2).
/// r_< = 0 gives 0 for n >= 1; r = r' = 0 is a SingularityError.
double fourier_d2(int n, double r, double r_prime);

struct D2Kernel {
  double z_plus = 0.0;
  double z_minus = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  int terms_used = 0;
};

/// z_+- = sinh r sinh r' / (cosh r cosh r' +- 1).
D2Kernel d2_kernel(double r, double r_prime);

/// lambda_+- = log(1 - z_+- cos psi) rebuilt from the constant term I_+- and
/// the cosine series with coefficients J_+-, truncated once the geometric tail
/// bound falls below 1e-15.
D2Kernel d2_lambda_check(double r, double r_prime, double psi);

/// I(z) = -(1/2) sum_{k>=1} (1/2)_k z^{2k} / (k! k), summed directly.
double d2_I_series(double z);
/// I(z) = log((1 + sqrt(1 - z^2)) / 2).
double d2_I_closed(double z);
/// J_n(z) = 2^{1-n} sum_k ((n+1)/2)_k ((n+2)/2)_k / (k! (n+1)_k) z^{2k+n} / (2k+n), summed directly.
double d2_J_series(int n, double z);
/// J_n(z) = (2/n) [(1 - sqrt(1 - z^2)) / (1 + sqrt(1 - z^2))]^{n/2}.
double d2_J_closed(int n, double z);

// ---- general d by quadrature -----------------------------------------------

/// H_m for dimension d from the defining integral, evaluated by adaptive
/// Gauss-Kronrod quadrature (absolute tolerance 1e-11) with geometric
/// refinement next to psi = 0 when A - B - 1 is small. B = 0 returns the
/// psi-independent value directly. SingularityError when A - B - 1 <= 1e-10.
double fourier_quadrature(int d, int m, const geometry::ABQuantities& ab,
                          greens::Representation rep = greens::Representation::finite);

double fourier_quadrature(int d, int m, double r, double r_prime, const std::vector<double>& theta,
                          const std::vector<double>& theta_p,
                          greens::Representation rep = greens::Representation::finite);

// ---- d = 3 elliptic machinery ----------------------------------------------

/// Parameter block of the reduction of int_y^c x^p dx / sqrt((a-x)(b-x)(c-x)(x-d))
/// to Jacobi-form integrals, with d = y = -1, c = 1, b = (A-1)/B, a = (A+1)/B.
/// Differences that vanish near coincidence (1 - k^2, 1 - alpha^2, k^2 - alpha^2,
/// alpha^2 - alpha1^2) are carried in closed form.
struct EllipticReduction {
  double a = 0.0, b = 0.0, c = 1.0, d_root = -1.0, y = -1.0;
  double alpha2 = 0.0;
  double alpha1_2 = 0.0;
  double g = 0.0;          // 2 B / sqrt((A+B-1)(A-B+1))
  double g_defining = 0.0; // 2 / sqrt((a-c)(b-d))
  double k2 = 0.0;
  double kc2 = 1.0;                  // 1 - k^2
  double one_minus_alpha2 = 1.0;     // 1 - alpha^2
  double k2_minus_alpha2 = 0.0;      // k^2 - alpha^2 (< 0)
  double alpha2_minus_alpha1_2 = 0.0;
  double u1 = 0.0;                   // K(k)
};

/// DomainError unless B > 0 and A - B > 1.
EllipticReduction bf_reduce(double A, double B);
EllipticReduction bf_reduce(const geometry::ABQuantities& ab);

/// V_j = int_0^{K} du / (1 - alpha^2 sn^2 u)^j: V_0, V_1, V_2 in closed form,
/// j >= 3 by the three-term recurrence. Each V_j is checked against the bracket
/// V_{j-1} <= V_j <= V_{j-1} / (1 - alpha^2); violation is a ConvergenceError.
double bf_V(int j, const EllipticReduction& red);
std::vector<double> bf_V_sequence(int jmax, const EllipticReduction& red);

/// int_{-1}^{1} x^p dx / sqrt((a-x)(b-x)(1-x)(x+1)) from the general moment formula.
double quartic_moment(int p, const EllipticReduction& red);
/// The same for p in {0, 1, 2} from the dedicated low-order formulas.
double quartic_moment_special(int p, const EllipticReduction& red);

/// Monomial coefficients of T_m, lowest power first (exact integers for m <= 50).
std::vector<double> chebyshev_monomial_coefficients(int m);

/// H_m for d = 3 assembled from quartic moments. Runs in double and repeats the
/// assembly in 50..400-digit arithmetic when the estimated cancellation would
/// leave fewer than 12 correct digits.
double fourier_d3_elliptic(int m, const geometry::ABQuantities& ab);
double fourier_d3_elliptic(int m, double r, double r_prime, double theta, double theta_p);

/// H_0 for d = 3 from the printed K / Pi closed form in terms of A and B.
double fourier_d3_m0_closed(const geometry::ABQuantities& ab);
/// The same closed form written with cos(theta -+ theta').
double fourier_d3_m0_closed(double r, double r_prime, double theta, double theta_p);

/// m = 0 component of the Euclidean 1/|x - x'| in spherical coordinates, via K.
double euclid_g3_m0(double r, double r_prime, double theta, double theta_p);

// ---- resummation -----------------------------------------------------------

/// exp(-arccosh(b)), b = (A-1)/B: the asymptotic geometric decay ratio of H_m.
double decay_ratio(const geometry::ABQuantities& ab);

/// sum_m cos(m psi) coeffs[m] with a remainder estimate from the observed decay
/// ratio of the last coefficients (never below analytic_ratio when given).
/// Converged means tail <= tol * |value|. A ratio >= 1 reports converged =
/// false and an infinite tail.
SeriesEval resum(const std::vector<double>& coeffs, double psi, double analytic_ratio = 0.0, double tol = 1e-10);

struct FourierSeries {
  std::vector<double> coeffs;
  std::vector<Method> methods;
  SeriesEval eval;
};

/// Computes coefficients m = 0, 1, ... until the tail estimate is below tol
/// (or max_terms), then resums at psi. Coefficients come from the d = 2 closed
/// form, the d = 3 elliptic assembly for m <= 12, and quadrature otherwise.
FourierSeries fourier_series(int d, double r, double r_prime, const std::vector<double>& theta,
                             const std::vector<double>& theta_p, double psi, double tol, int max_terms = 200);

} // namespace hypgreen::fourier
