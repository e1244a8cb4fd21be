#pragma once

// Fundamental solution of the Laplace-Beltrami operator on the R-radius
// hyperboloid,
//   H_R^d(x, x') = Gamma(d/2) / (2 pi^{d/2} R^{d-2}) I_d(rho),
//   I_d(rho) = int_rho^inf dx / sinh^{d-1} x,
// with rho the geodesic distance at unit radius, and the Euclidean comparator.

#include <string>
#include <utility>
#include <vector>

#include "hypgreen/geometry.hpp"

namespace hypgreen::greens {

enum class Representation { finite, hyp2f1_a, hyp2f1_b, legendre_q };

const char* representation_name(Representation rep);
/// Parses "finite", "hyp2f1_a", "hyp2f1_b", "legendre_q"; DomainError otherwise.
Representation parse_representation(const std::string& name);
constexpr Representation kAllRepresentations[] = {Representation::finite, Representation::hyp2f1_a,
                                                  Representation::hyp2f1_b, Representation::legendre_q};

/// Separations below this are refused with SingularityError.
constexpr double kMinRho = 1e-8;

/// Finite-sum closed form. Evaluated in double when the alternating sum keeps
/// at least 13 significant digits, otherwise in extended precision (up to 400
/// digits; ConvergenceError beyond that). For odd d both printed variants are
/// evaluated and their mean returned.
double I_d_finite(int d, double rho);

/// The two odd-d finite-sum variants separately (first, second). DomainError for even d.
std::pair<double, double> I_d_finite_odd_variants(int d, double rho);

/// Digits lost to cancellation by the double-precision finite sum
/// (log10 of largest term over result).
double I_d_finite_cancellation_digits(int d, double rho);

/// Hypergeometric forms: a uses 2F1((d-1)/2, d/2; (d+1)/2; sech^2 rho),
/// b uses 2F1(1/2, 1; (d+1)/2; sech^2 rho).
double I_d_hyp2f1(int d, double rho, Representation form);

/// Qhat_{d/2-1}^{d/2-1}(cosh rho) / (2^{d/2-1} Gamma(d/2) sinh^{d/2-1} rho).
double I_d_legendreQ(int d, double rho);

/// Dispatch on representation.
double I_d(int d, double rho, Representation rep = Representation::finite);

/// Gamma(d/2) / (2 pi^{d/2} R^{d-2}).
double normalization(int d, double R);

/// H_R^d for two ambient points on the same hyperboloid.
double fundamental_H(int d, double R, const geometry::AmbientPoint& x, const geometry::AmbientPoint& y,
                     Representation rep = Representation::finite);

/// H_R^d from the unit-radius geodesic distance.
double fundamental_H_rho(int d, double R, double rho, Representation rep = Representation::finite);

/// h^d = I_d(rho) for points on the unit hyperboloid.
double unit_h(int d, const geometry::AmbientPoint& xhat, const geometry::AmbientPoint& yhat,
              Representation rep = Representation::finite);

/// Euclidean fundamental solution in R^d, d >= 1.
double euclid_G(int d, const std::vector<double>& x, const std::vector<double>& y);

/// Euclidean fundamental solution from the separation |x - y|.
double euclid_G_dist(int d, double dist);

} // namespace hypgreen::greens
