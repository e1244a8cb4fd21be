#include "hypgreen/greens.hpp"

#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/log1p.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "hypgreen/errors.hpp"
#include "hypgreen/specfun.hpp"
#include "mp.hpp"

namespace hypgreen::greens {

namespace {

// Significant digits the finite sum must retain after cancellation.
constexpr double kRequiredDigits = 13.0;

void check_args(int d, double rho) {
  if (d < 2) throw DomainError("I_d: dimension d must be at least 2");
  if (!std::isfinite(rho) || !(rho > 0.0)) {
    if (rho == 0.0) throw SingularityError("coincident points (rho = 0)");
    throw DomainError("I_d: rho must be positive and finite");
  }
  if (rho < kMinRho) throw SingularityError("rho below 1e-8; use the Euclidean comparator");
}

template <class Real>
struct TermSum {
  Real value;
  Real max_term;
};

template <class Real>
Real dfact(int n) {
  Real r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

template <class Real>
Real fact(int n) {
  Real r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

template <class Real>
TermSum<Real> even_form(int d, const Real& rho) {
  using std::abs;
  using std::cosh;
  using std::sinh;
  const Real sh = sinh(rho);
  const Real ch = cosh(rho);
  const Real sh2 = sh * sh;
  // log coth(rho/2) = log1p(2 / expm1(rho))
  const Real lc = boost::math::log1p(Real(2) / boost::math::expm1(rho));
  Real s = lc;
  Real mx = abs(lc);
  Real shp = 1;
  for (int k = 1; k <= d / 2 - 1; ++k) {
    shp *= sh2;
    Real term = ch * dfact<Real>(2 * k - 2) / (dfact<Real>(2 * k - 1) * shp);
    if (k % 2 == 1) term = -term;
    s += term;
    if (abs(term) > mx) mx = abs(term);
  }
  Real pref = dfact<Real>(d - 3) / dfact<Real>(d - 2);
  if ((d / 2 - 1) % 2 == 1) pref = -pref;
  return {pref * s, abs(pref) * mx};
}

template <class Real>
TermSum<Real> odd_form_coth(int d, const Real& rho) {
  using std::abs;
  using std::tanh;
  const Real coth = 1 / tanh(rho);
  const Real coth2 = coth * coth;
  const int n = (d - 1) / 2;
  Real s = dfact<Real>(d - 3) / dfact<Real>(d - 2);
  Real mx = abs(s);
  const Real f = fact<Real>((d - 3) / 2);
  Real cp = coth;
  for (int k = 1; k <= n; ++k) {
    Real term = f * cp / ((2 * k - 1) * fact<Real>(k - 1) * fact<Real>((d - 2 * k - 1) / 2));
    if (k % 2 == 1) term = -term;
    s += term;
    if (abs(term) > mx) mx = abs(term);
    cp *= coth2;
  }
  if (n % 2 == 1) s = -s;
  return {s, mx};
}

template <class Real>
TermSum<Real> odd_form_sinh(int d, const Real& rho) {
  using std::abs;
  using std::cosh;
  using std::sinh;
  const Real sh = sinh(rho);
  const Real ch = cosh(rho);
  const int n = (d - 1) / 2;
  Real s = 1;
  Real mx = 1;
  Real shp = sh;
  for (int k = 1; k <= n; ++k) {
    Real term = ch * dfact<Real>(2 * k - 3) / (dfact<Real>(2 * k - 2) * shp);
    if (k % 2 == 1) term = -term;
    s += term;
    if (abs(term) > mx) mx = abs(term);
    shp *= sh * sh;
  }
  Real pref = dfact<Real>(d - 3) / dfact<Real>(d - 2);
  if (n % 2 == 1) pref = -pref;
  return {pref * s, abs(pref) * mx};
}

template <class Real>
double lost_digits(const TermSum<Real>& t) {
  using std::abs;
  using std::log10;
  if (t.value == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(log10(t.max_term / abs(t.value)));
}

template <class Real>
bool accept(const TermSum<Real>& t) {
  const double digits = std::numeric_limits<Real>::digits10;
  return digits - lost_digits(t) >= kRequiredDigits;
}

// Evaluates form<Real> in increasing precision until enough digits survive.
template <class Form>
double tiered(Form&& form, double rho) {
  if (auto t = form(rho); accept(t)) return t.value;
  if (auto t = form(mp::Real50(rho)); accept(t)) return static_cast<double>(t.value);
  if (auto t = form(mp::Real100(rho)); accept(t)) return static_cast<double>(t.value);
  if (auto t = form(mp::Real200(rho)); accept(t)) return static_cast<double>(t.value);
  if (auto t = form(mp::Real400(rho)); accept(t)) return static_cast<double>(t.value);
  throw ConvergenceError("I_d_finite: cancellation exceeds 400-digit working precision; use a hypergeometric form");
}

double log_sinh(double x) { return x < 20.0 ? std::log(std::sinh(x)) : x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x)); }
double log_cosh(double x) { return x < 20.0 ? std::log(std::cosh(x)) : x - std::numbers::ln2 + std::log1p(std::exp(-2.0 * x)); }

} // namespace

const char* representation_name(Representation rep) {
  switch (rep) {
    case Representation::finite: return "finite";
    case Representation::hyp2f1_a: return "hyp2f1_a";
    case Representation::hyp2f1_b: return "hyp2f1_b";
    case Representation::legendre_q: return "legendre_q";
  }
  return "unknown";
}

Representation parse_representation(const std::string& name) {
  for (Representation r : kAllRepresentations) {
    if (name == representation_name(r)) return r;
  }
  throw DomainError("unknown representation '" + name + "'");
}

std::pair<double, double> I_d_finite_odd_variants(int d, double rho) {
  check_args(d, rho);
  if (d % 2 == 0) throw DomainError("I_d_finite_odd_variants: d must be odd");
  const double a = tiered([d](auto r) { return odd_form_coth(d, r); }, rho);
  const double b = tiered([d](auto r) { return odd_form_sinh(d, r); }, rho);
  return {a, b};
}

double I_d_finite(int d, double rho) {
  check_args(d, rho);
  if (d % 2 == 0) return tiered([d](auto r) { return even_form(d, r); }, rho);
  const auto [a, b] = I_d_finite_odd_variants(d, rho);
  return 0.5 * (a + b);
}

double I_d_finite_cancellation_digits(int d, double rho) {
  check_args(d, rho);
  if (d % 2 == 0) return lost_digits(even_form(d, rho));
  return std::max(lost_digits(odd_form_coth(d, rho)), lost_digits(odd_form_sinh(d, rho)));
}

double I_d_hyp2f1(int d, double rho, Representation form) {
  check_args(d, rho);
  const double ch = std::cosh(rho);
  const double th = std::tanh(rho);
  const specfun::UnitArg x{1.0 / (ch * ch), th * th};
  const double lc = log_cosh(rho);
  if (form == Representation::hyp2f1_a) {
    const SignedLog pref{-std::log(d - 1.0) - (d - 1.0) * lc, 1};
    return (pref * specfun::gauss_2f1_log(0.5 * (d - 1.0), 0.5 * d, 0.5 * (d + 1.0), x)).value();
  }
  if (form == Representation::hyp2f1_b) {
    const SignedLog pref{-std::log(d - 1.0) - lc - (d - 2.0) * log_sinh(rho), 1};
    return (pref * specfun::gauss_2f1_log(0.5, 1.0, 0.5 * (d + 1.0), x)).value();
  }
  throw DomainError("I_d_hyp2f1: form must be hyp2f1_a or hyp2f1_b");
}

double I_d_legendreQ(int d, double rho) {
  check_args(d, rho);
  const double nu = 0.5 * d - 1.0;
  const SignedLog q = specfun::legendre_Qhat_log(nu, nu, specfun::CutArg::from_cosh(rho));
  const SignedLog pref{-nu * std::numbers::ln2 - std::lgamma(0.5 * d) - nu * log_sinh(rho), 1};
  return (pref * q).value();
}

double I_d(int d, double rho, Representation rep) {
  switch (rep) {
    case Representation::finite: return I_d_finite(d, rho);
    case Representation::hyp2f1_a:
    case Representation::hyp2f1_b: return I_d_hyp2f1(d, rho, rep);
    case Representation::legendre_q: return I_d_legendreQ(d, rho);
  }
  throw DomainError("I_d: unknown representation");
}

double normalization(int d, double R) {
  if (d < 2) throw DomainError("normalization: d must be at least 2");
  if (!(R > 0.0)) throw DomainError("normalization: R must be positive");
  return std::exp(std::lgamma(0.5 * d) - std::numbers::ln2 - 0.5 * d * std::log(std::numbers::pi) -
                  (d - 2.0) * std::log(R));
}

double fundamental_H_rho(int d, double R, double rho, Representation rep) {
  return normalization(d, R) * I_d(d, rho, rep);
}

namespace {

double checked_rho(int d, double R, const geometry::AmbientPoint& x, const geometry::AmbientPoint& y) {
  if (x.dim() != d || y.dim() != d) throw DomainError("fundamental_H: points must have d + 1 coordinates");
  if (std::fabs(x.R - R) > 1e-12 * R || std::fabs(y.R - R) > 1e-12 * R) {
    throw DomainError("fundamental_H: points must lie on the R-radius hyperboloid");
  }
  geometry::check_on_hyperboloid(x);
  geometry::check_on_hyperboloid(y);
  const double rho = geometry::acosh1p(geometry::cosh_unit_distance_m1(x, y));
  if (rho < kMinRho) throw SingularityError("coincident points");
  return rho;
}

} // namespace

double fundamental_H(int d, double R, const geometry::AmbientPoint& x, const geometry::AmbientPoint& y,
                     Representation rep) {
  return fundamental_H_rho(d, R, checked_rho(d, R, x, y), rep);
}

double unit_h(int d, const geometry::AmbientPoint& xhat, const geometry::AmbientPoint& yhat, Representation rep) {
  return I_d(d, checked_rho(d, 1.0, xhat, yhat), rep);
}

double euclid_G_dist(int d, double dist) {
  if (d < 1) throw DomainError("euclid_G: d must be at least 1");
  if (!(dist >= 0.0) || !std::isfinite(dist)) throw DomainError("euclid_G: distance must be finite");
  if (dist == 0.0) throw SingularityError("coincident points");
  if (d == 2) return -std::log(dist) / (2.0 * std::numbers::pi);
  const double c = std::tgamma(0.5 * d) / (2.0 * std::pow(std::numbers::pi, 0.5 * d) * (d - 2.0));
  return c * std::pow(dist, 2.0 - d);
}

double euclid_G(int d, const std::vector<double>& x, const std::vector<double>& y) {
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) {
    throw DomainError("euclid_G: points must have d coordinates");
  }
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
  return euclid_G_dist(d, std::sqrt(s));
}

} // namespace hypgreen::greens
