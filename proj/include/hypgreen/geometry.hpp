#pragma once

// Hyperboloid model of d-dimensional hyperbolic space: the upper sheet of
// [x, x] = x0^2 - x1^2 - ... - xd^2 = R^2, its standard geodesic polar chart,
// and the two-point kinematics (distance, separation angle, A and B) used by
// every kernel.

#include <vector>

namespace hypgreen::geometry {

struct AmbientPoint {
  std::vector<double> x;  // x0 .. xd
  double R = 1.0;
  [[nodiscard]] int dim() const { return static_cast<int>(x.size()) - 1; }
};

struct GeodesicPolarPoint {
  double R = 1.0;
  double r = 0.0;
  std::vector<double> theta;  // theta_1 .. theta_{d-2}, each in [0, pi]
  double phi = 0.0;           // [0, 2 pi)
  [[nodiscard]] int dim() const { return static_cast<int>(theta.size()) + 2; }
};

/// Everything the kernels consume about a pair of points at unit radius.
/// cosh_rho_m1 = cosh(rho) - 1 is carried separately for small separations;
/// gap = A - B - 1 likewise.
struct SeparationGeometry {
  double r = 0.0;
  double r_prime = 0.0;
  double gamma = 0.0;
  double rho = 0.0;
  double cosh_rho = 1.0;
  double cosh_rho_m1 = 0.0;
  double A = 1.0;
  double B = 0.0;
  double gap = 0.0;
};

/// Chart to ambient coordinates.
AmbientPoint embed(const GeodesicPolarPoint& p);

/// Ambient to chart coordinates; phi is returned in [0, 2 pi).
GeodesicPolarPoint unembed(const AmbientPoint& x);

/// Throws DomainError unless x0 > 0 and [x, x] = R^2 to relative 1e-12.
void check_on_hyperboloid(const AmbientPoint& x);

/// x0 y0 - sum xi yi. DomainError on dimension mismatch.
double minkowski_form(const AmbientPoint& x, const AmbientPoint& y);

/// [x, y] / R^2 - 1, evaluated from the coordinate differences so that it keeps
/// full relative precision for nearby points. DomainError when the points have
/// different R or dimension, or the value is below -1e-12.
double cosh_unit_distance_m1(const AmbientPoint& x, const AmbientPoint& y);

/// R arccosh([x, y] / R^2).
double geodesic_distance(const AmbientPoint& x, const AmbientPoint& y);

/// arccosh(1 + t) for t >= 0 without cancellation.
double acosh1p(double t);

/// Unit vector on S^{d-1} for the angular part of the chart.
std::vector<double> angular_unit_vector(const std::vector<double>& theta, double phi);

/// Separation angle gamma in [0, pi] between two angular positions (theta
/// lists of equal length d-2). Evaluated as 2 atan2(|u - u'|, |u + u'|), which
/// equals arccos of the product-sum formula and stays accurate near 0 and pi.
double separation_angle(const std::vector<double>& theta, double phi, const std::vector<double>& theta_p,
                        double phi_p);

/// Product-sum form of cos(gamma), for cross-checks.
double cos_separation_angle(const std::vector<double>& theta, double phi, const std::vector<double>& theta_p,
                            double phi_p);

/// cosh(rho) - 1 = 2 sinh^2((r - r')/2) + 2 sinh r sinh r' sin^2(gamma/2).
double cosh_rho_m1(double r, double r_prime, double gamma);

struct ABQuantities {
  double A = 1.0;
  double B = 0.0;
  double gap = 0.0;  // A - B - 1, the value of cosh(rho) - 1 at phi = phi'
};

/// A and B with cosh rho = A - B cos(phi - phi') for fixed radii and theta
/// angles. For d = 2 (empty theta lists) A = cosh r cosh r', B = sinh r sinh r'.
ABQuantities ab_quantities(double r, double r_prime, const std::vector<double>& theta,
                           const std::vector<double>& theta_p);

/// Separation geometry of two chart points (R is ignored; the kinematics are at unit radius).
SeparationGeometry separation(const GeodesicPolarPoint& p, const GeodesicPolarPoint& q);

/// Separation geometry from (r, r', gamma) alone; A and B are those of the
/// d = 2 reading (phi - phi' = gamma) and are only meaningful in that case.
SeparationGeometry separation(double r, double r_prime, double gamma);

/// Reduces an angle difference into (-pi, pi].
double wrap_angle(double a);

} // namespace hypgreen::geometry
