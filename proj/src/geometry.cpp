#include "hypgreen/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypgreen/errors.hpp"

namespace hypgreen::geometry {

namespace {

double sq(double v) { return v * v; }

void check_chart(const GeodesicPolarPoint& p) {
  if (!(p.R > 0.0)) throw DomainError("geodesic polar point: R must be positive");
  if (!(p.r >= 0.0) || !std::isfinite(p.r)) throw DomainError("geodesic polar point: r must be finite and nonnegative");
  for (double t : p.theta) {
    if (!(t >= 0.0) || !(t <= std::numbers::pi)) throw DomainError("geodesic polar point: theta must lie in [0, pi]");
  }
  if (!std::isfinite(p.phi)) throw DomainError("geodesic polar point: phi must be finite");
}

} // namespace

double wrap_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(a, two_pi);  // [-pi, pi]
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

std::vector<double> angular_unit_vector(const std::vector<double>& theta, double phi) {
  std::vector<double> u;
  u.reserve(theta.size() + 2);
  double s = 1.0;
  for (double t : theta) {
    u.push_back(s * std::cos(t));
    s *= std::sin(t);
  }
  u.push_back(s * std::cos(phi));
  u.push_back(s * std::sin(phi));
  return u;
}

AmbientPoint embed(const GeodesicPolarPoint& p) {
  check_chart(p);
  AmbientPoint x;
  x.R = p.R;
  x.x.push_back(p.R * std::cosh(p.r));
  const double sr = p.R * std::sinh(p.r);
  for (double u : angular_unit_vector(p.theta, p.phi)) x.x.push_back(sr * u);
  return x;
}

GeodesicPolarPoint unembed(const AmbientPoint& x) {
  check_on_hyperboloid(x);
  const int d = x.dim();
  GeodesicPolarPoint p;
  p.R = x.R;
  double norm2 = 0.0;
  for (int i = 1; i <= d; ++i) norm2 += sq(x.x[i]);
  p.r = std::asinh(std::sqrt(norm2) / x.R);
  // Tail norms: tail[i] = |(x_i, ..., x_d)|.
  std::vector<double> tail(d + 2, 0.0);
  for (int i = d; i >= 1; --i) tail[i] = std::hypot(tail[i + 1], x.x[i]);
  for (int i = 1; i <= d - 2; ++i) p.theta.push_back(std::atan2(tail[i + 1], x.x[i]));
  double phi = std::atan2(x.x[d], x.x[d - 1]);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  p.phi = phi;
  return p;
}

void check_on_hyperboloid(const AmbientPoint& x) {
  if (x.dim() < 1) throw DomainError("ambient point: needs at least two coordinates");
  if (!(x.R > 0.0)) throw DomainError("ambient point: R must be positive");
  if (!(x.x[0] > 0.0)) throw DomainError("ambient point: x0 must be positive (upper sheet)");
  double spatial = 0.0;
  for (int i = 1; i <= x.dim(); ++i) spatial += sq(x.x[i]);
  const double form = sq(x.x[0]) - spatial;
  if (std::fabs(form - sq(x.R)) > 1e-12 * (sq(x.x[0]) + spatial)) {
    throw DomainError("ambient point: [x, x] differs from R^2");
  }
}

double minkowski_form(const AmbientPoint& x, const AmbientPoint& y) {
  if (x.x.size() != y.x.size()) throw DomainError("minkowski_form: dimension mismatch");
  double s = x.x[0] * y.x[0];
  for (std::size_t i = 1; i < x.x.size(); ++i) s -= x.x[i] * y.x[i];
  return s;
}

double cosh_unit_distance_m1(const AmbientPoint& x, const AmbientPoint& y) {
  if (x.x.size() != y.x.size()) throw DomainError("geodesic_distance: dimension mismatch");
  if (std::fabs(x.R - y.R) > 1e-12 * x.R) throw DomainError("geodesic_distance: points on different hyperboloids");
  // [x, y]/R^2 - 1 = -[x - y, x - y] / (2 R^2)
  double spatial = 0.0;
  for (std::size_t i = 1; i < x.x.size(); ++i) spatial += sq(x.x[i] - y.x[i]);
  const double t = (spatial - sq(x.x[0] - y.x[0])) / (2.0 * x.R * y.R);
  if (t < -1e-12) throw DomainError("geodesic_distance: [x, y]/R^2 < 1, points not on one sheet");
  return std::max(t, 0.0);
}

double acosh1p(double t) { return std::log1p(t + std::sqrt(t * (t + 2.0))); }

double geodesic_distance(const AmbientPoint& x, const AmbientPoint& y) {
  return x.R * acosh1p(cosh_unit_distance_m1(x, y));
}

double separation_angle(const std::vector<double>& theta, double phi, const std::vector<double>& theta_p,
                        double phi_p) {
  if (theta.size() != theta_p.size()) throw DomainError("separation_angle: dimension mismatch");
  const auto u = angular_unit_vector(theta, phi);
  const auto v = angular_unit_vector(theta_p, phi_p);
  double dm = 0.0, dp = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dm += sq(u[i] - v[i]);
    dp += sq(u[i] + v[i]);
  }
  return 2.0 * std::atan2(std::sqrt(dm), std::sqrt(dp));
}

double cos_separation_angle(const std::vector<double>& theta, double phi, const std::vector<double>& theta_p,
                            double phi_p) {
  if (theta.size() != theta_p.size()) throw DomainError("separation_angle: dimension mismatch");
  double c = 0.0, s = 1.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    c += s * std::cos(theta[i]) * std::cos(theta_p[i]);
    s *= std::sin(theta[i]) * std::sin(theta_p[i]);
  }
  c += s * std::cos(phi - phi_p);
  return std::clamp(c, -1.0, 1.0);
}

double cosh_rho_m1(double r, double r_prime, double gamma) {
  return 2.0 * sq(std::sinh(0.5 * (r - r_prime))) + 2.0 * std::sinh(r) * std::sinh(r_prime) * sq(std::sin(0.5 * gamma));
}

ABQuantities ab_quantities(double r, double r_prime, const std::vector<double>& theta,
                           const std::vector<double>& theta_p) {
  if (theta.size() != theta_p.size()) throw DomainError("ab_quantities: dimension mismatch");
  if (!(r >= 0.0) || !(r_prime >= 0.0)) throw DomainError("ab_quantities: radii must be nonnegative");
  // cos gamma = C + S cos(phi - phi'): C collects the theta terms, S the sine product.
  double c = 0.0, s = 1.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    c += s * std::cos(theta[i]) * std::cos(theta_p[i]);
    s *= std::sin(theta[i]) * std::sin(theta_p[i]);
  }
  const double shsh = std::sinh(r) * std::sinh(r_prime);
  ABQuantities q;
  q.A = std::cosh(r) * std::cosh(r_prime) - shsh * c;
  q.B = std::max(0.0, shsh * s);
  // At phi = phi' the angular separation follows from |u - u'|^2 = 2 (1 - cos gamma0).
  const auto u = angular_unit_vector(theta, 0.0);
  const auto v = angular_unit_vector(theta_p, 0.0);
  double dm = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) dm += sq(u[i] - v[i]);
  q.gap = 2.0 * sq(std::sinh(0.5 * (r - r_prime))) + 0.5 * shsh * dm;
  return q;
}

SeparationGeometry separation(const GeodesicPolarPoint& p, const GeodesicPolarPoint& q) {
  check_chart(p);
  check_chart(q);
  if (p.theta.size() != q.theta.size()) throw DomainError("separation: dimension mismatch");
  SeparationGeometry g;
  g.r = p.r;
  g.r_prime = q.r;
  g.gamma = separation_angle(p.theta, p.phi, q.theta, q.phi);
  g.cosh_rho_m1 = cosh_rho_m1(p.r, q.r, g.gamma);
  g.cosh_rho = 1.0 + g.cosh_rho_m1;
  g.rho = acosh1p(g.cosh_rho_m1);
  const ABQuantities ab = ab_quantities(p.r, q.r, p.theta, q.theta);
  g.A = ab.A;
  g.B = ab.B;
  g.gap = ab.gap;
  return g;
}

SeparationGeometry separation(double r, double r_prime, double gamma) {
  if (!(r >= 0.0) || !(r_prime >= 0.0)) throw DomainError("separation: radii must be nonnegative");
  if (!(gamma >= 0.0) || !(gamma <= std::numbers::pi)) throw DomainError("separation: gamma must lie in [0, pi]");
  SeparationGeometry g;
  g.r = r;
  g.r_prime = r_prime;
  g.gamma = gamma;
  g.cosh_rho_m1 = cosh_rho_m1(r, r_prime, gamma);
  g.cosh_rho = 1.0 + g.cosh_rho_m1;
  g.rho = acosh1p(g.cosh_rho_m1);
  g.A = std::cosh(r) * std::cosh(r_prime);
  g.B = std::sinh(r) * std::sinh(r_prime);
  g.gap = 2.0 * sq(std::sinh(0.5 * (r - r_prime)));
  return g;
}

} // namespace hypgreen::geometry
