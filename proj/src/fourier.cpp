#include "hypgreen/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hypgreen/elliptic.hpp"
#include "hypgreen/errors.hpp"
#include "hypgreen/quadrature.hpp"
#include "hypgreen/specfun.hpp"
#include "mp.hpp"

namespace hypgreen::fourier {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTouchingGap = 1e-10;

void check_radii(double r, double r_prime) {
  if (!(r >= 0.0) || !(r_prime >= 0.0) || !std::isfinite(r) || !std::isfinite(r_prime)) {
    throw DomainError("radii must be finite and nonnegative");
  }
}

double sinh2_half(double x) {
  const double s = std::sinh(0.5 * x);
  return s * s;
}

// ---- d = 3 elliptic reduction in a generic real type ----------------------

template <class Real>
struct Reduction {
  Real a, b, alpha2, alpha1_2, g, g_def, k2, kc2;
  Real e;  // 1 - alpha^2
  Real f;  // k^2 - alpha^2
  Real h;  // alpha^2 - alpha1^2
};

template <class Real>
Reduction<Real> reduce(const Real& A, const Real& B, const Real& gap) {
  using std::sqrt;
  if (!(B > 0)) throw DomainError("elliptic reduction: requires B > 0");
  if (!(gap > 0)) throw DomainError("elliptic reduction: requires A - B > 1");
  const Real s = gap + 2 * B;  // A + B - 1
  const Real t = gap + 2;      // A - B + 1
  Reduction<Real> r;
  r.a = (A + 1) / B;
  r.b = (A - 1) / B;
  r.alpha2 = 2 * B / s;
  r.alpha1_2 = 2 * (gap + B) / s;
  r.e = gap / s;
  r.h = -2 * gap / s;
  r.g = 2 * B / sqrt(s * t);
  r.g_def = 2 / sqrt((r.a - 1) * (r.b + 1));
  r.k2 = 4 * B / (s * t);
  r.kc2 = gap * (gap + 2 + 2 * B) / (s * t);
  r.f = -2 * B * gap / (s * t);
  if (!(r.b > 1) || !(r.a > r.b)) throw DomainError("elliptic reduction: ordering d <= y < c < b < a violated");
  return r;
}

template <class Real>
struct VSequence {
  std::vector<Real> V;
  double v2_amplification = 1.0;  // |terms| / |bracket| in the V_2 formula
};

template <class Real>
VSequence<Real> v_sequence(int jmax, const Reduction<Real>& red) {
  using std::abs;
  VSequence<Real> out;
  const Real K = specfun::elliptic_K_kc2(red.kc2);
  out.V.push_back(K);
  if (jmax == 0) return out;
  const Real Pi = specfun::elliptic_Pi_kc2(red.alpha2, red.e, red.kc2);
  out.V.push_back(Pi);
  if (jmax == 1) return out;
  const Real E = specfun::elliptic_E_kc2(red.k2, red.kc2);
  const Real& a2 = red.alpha2;
  const Real& e = red.e;
  const Real& f = red.f;
  // 2 a2 k2 + 2 a2 - a2^2 - 3 k2 = -a2 e + f (2 a2 - 3)
  const Real t1 = f * K;
  const Real t2 = a2 * E;
  const Real t3 = (-a2 * e + f * (2 * a2 - 3)) * Pi;
  const Real bracket = t1 + t2 + t3;
  out.v2_amplification = static_cast<double>((abs(t1) + abs(t2) + abs(t3)) / abs(bracket));
  out.V.push_back(bracket / (-2 * e * f));
  // a2 k2 + a2 - 3 k2 = e^2 - 1 + f (a2 - 3);  a2^2 - 2 a2 k2 - 2 a2 + 3 k2 = a2 e + f (3 - 2 a2)
  const Real c1 = e * e - 1 + f * (a2 - 3);
  const Real c2 = a2 * e + f * (3 - 2 * a2);
  for (int m = 0; m + 3 <= jmax; ++m) {
    const Real num = (2 * m + 1) * red.k2 * out.V[m] + 2 * (m + 1) * c1 * out.V[m + 1] + (2 * m + 3) * c2 * out.V[m + 2];
    out.V.push_back(num / (2 * (m + 2) * e * f));
  }
  // 1 <= 1/(1 - a2 sn^2) <= 1/(1 - a2) brackets every step of the sequence.
  const Real slack = Real(1e-9);
  for (std::size_t j = 1; j < out.V.size(); ++j) {
    const Real lo = out.V[j - 1] * (1 - slack);
    const Real hi = out.V[j - 1] / e * (1 + slack);
    if (!(out.V[j] >= lo) || !(out.V[j] <= hi)) {
      throw ConvergenceError("V_j recurrence left its admissible range (blow-up) at j = " + std::to_string(j));
    }
  }
  return out;
}

template <class Real>
std::vector<Real> chebyshev_coeffs(int m) {
  std::vector<Real> prev{Real(1)};
  if (m == 0) return prev;
  std::vector<Real> cur{Real(0), Real(1)};
  for (int n = 1; n < m; ++n) {
    std::vector<Real> next(cur.size() + 1, Real(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Weight of V_j in the p-th moment: g C(p,j) alpha1^{2(p-j)} h^j / alpha^{2p}.
template <class Real>
Real moment_weight(int p, int j, const Reduction<Real>& red) {
  using std::pow;
  Real binom = 1;
  for (int i = 1; i <= j; ++i) binom = binom * (p - j + i) / i;
  return red.g * binom * pow(red.alpha1_2, p - j) * pow(red.h, j) / pow(red.alpha2, p);
}

template <class Real>
Real moment(int p, const Reduction<Real>& red, const std::vector<Real>& V) {
  Real s = 0;
  for (int j = 0; j <= p; ++j) s += moment_weight(p, j, red) * V[j];
  return s;
}

template <class Real>
struct Assembly {
  Real value;
  double error_estimate;
};

template <class Real>
Assembly<Real> assemble_d3(int m, const Real& A, const Real& B, const Real& gap) {
  using std::abs;
  const Reduction<Real> red = reduce(A, B, gap);
  const VSequence<Real> vs = v_sequence(m + 1, red);
  const std::vector<Real> t = chebyshev_coeffs<Real>(m);
  const Real ratio = A / B;
  // (A/B - x) T_m(x) = sum_p c_p x^p
  std::vector<Real> c(m + 2, Real(0));
  for (int p = 0; p <= m; ++p) {
    c[p] += ratio * t[p];
    c[p + 1] -= t[p];
  }
  Real sum = 0, mag = 0;
  for (int p = 0; p <= m + 1; ++p) {
    if (c[p] == 0) continue;
    for (int j = 0; j <= p; ++j) {
      const Real term = c[p] * moment_weight(p, j, red) * vs.V[j];
      sum += term;
      mag += abs(term);
    }
  }
  const Real eps_m = (m == 0) ? Real(1) : Real(2);
  const Real scale = eps_m / Real(kPi);
  Real value = scale * sum;
  Real magnitude = scale * mag;
  if (m == 0) {
    value -= 1;
    magnitude += 1;
  }
  const double eps = static_cast<double>(std::numeric_limits<Real>::epsilon());
  const double err = static_cast<double>(magnitude) * eps * 100.0 * std::max(1.0, vs.v2_amplification);
  return {value, err};
}

template <class Real>
bool acceptable(const Assembly<Real>& a) {
  using std::abs;
  return a.error_estimate <= 1e-13 * static_cast<double>(abs(a.value)) + 1e-15;
}

double d3_elliptic_tiered(int m, const geometry::ABQuantities& ab) {
  if (auto a = assemble_d3<double>(m, ab.A, ab.B, ab.gap); acceptable(a)) return a.value;
  if (auto a = assemble_d3<mp::Real50>(m, ab.A, ab.B, ab.gap); acceptable(a)) return static_cast<double>(a.value);
  if (auto a = assemble_d3<mp::Real100>(m, ab.A, ab.B, ab.gap); acceptable(a)) return static_cast<double>(a.value);
  if (auto a = assemble_d3<mp::Real200>(m, ab.A, ab.B, ab.gap); acceptable(a)) return static_cast<double>(a.value);
  if (auto a = assemble_d3<mp::Real400>(m, ab.A, ab.B, ab.gap); acceptable(a)) return static_cast<double>(a.value);
  throw ConvergenceError("fourier_d3_elliptic: cancellation exceeds 400-digit working precision");
}

EllipticReduction to_public(const Reduction<double>& r) {
  EllipticReduction out;
  out.a = r.a;
  out.b = r.b;
  out.alpha2 = r.alpha2;
  out.alpha1_2 = r.alpha1_2;
  out.g = r.g;
  out.g_defining = r.g_def;
  out.k2 = r.k2;
  out.kc2 = r.kc2;
  out.one_minus_alpha2 = r.e;
  out.k2_minus_alpha2 = r.f;
  out.alpha2_minus_alpha1_2 = r.h;
  out.u1 = specfun::elliptic_K_kc2(r.kc2);
  return out;
}

Reduction<double> from_public(const EllipticReduction& red) {
  Reduction<double> r;
  r.a = red.a;
  r.b = red.b;
  r.alpha2 = red.alpha2;
  r.alpha1_2 = red.alpha1_2;
  r.g = red.g;
  r.g_def = red.g_defining;
  r.k2 = red.k2;
  r.kc2 = red.kc2;
  r.e = red.one_minus_alpha2;
  r.f = red.k2_minus_alpha2;
  r.h = red.alpha2_minus_alpha1_2;
  return r;
}

} // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::closed_d2: return "closed_d2";
    case Method::quadrature: return "quadrature";
    case Method::elliptic_d3: return "elliptic_d3";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::closed_d2, Method::quadrature, Method::elliptic_d3}) {
    if (name == method_name(m)) return m;
  }
  throw DomainError("unknown method '" + name + "'");
}

// ---- d = 2 -----------------------------------------------------------------

double fourier_d2(int n, double r, double r_prime) {
  if (n < 0) throw DomainError("fourier_d2: n must be nonnegative");
  check_radii(r, r_prime);
  const double rl = std::min(r, r_prime);
  const double rg = std::max(r, r_prime);
  if (rg == 0.0) throw SingularityError("fourier_d2: both radii are zero");
  if (n == 0) return std::log1p(2.0 / std::expm1(rg));  // (1/2) log((cosh r_> + 1)/(cosh r_> - 1))
  if (rl == 0.0) return 0.0;
  // [(cosh r_< - 1)/(cosh r_< + 1)]^{1/2} = tanh(r_</2), likewise for r_>.
  const double tl = std::tanh(0.5 * rl);
  const double tg = std::tanh(0.5 * rg);
  return (std::pow(tl / tg, n) - std::pow(tl * tg, n)) / n;
}

D2Kernel d2_kernel(double r, double r_prime) {
  check_radii(r, r_prime);
  D2Kernel k;
  const double shsh = std::sinh(r) * std::sinh(r_prime);
  const double chch = std::cosh(r) * std::cosh(r_prime);
  k.z_plus = shsh / (chch + 1.0);
  k.z_minus = shsh / (chch - 1.0);
  return k;
}

double d2_I_closed(double z) {
  if (!(z >= 0.0) || !(z < 1.0)) throw DomainError("d2_I: z must lie in [0, 1)");
  return std::log1p(std::sqrt(1.0 - z * z)) - std::numbers::ln2;
}

double d2_I_series(double z) {
  if (!(z >= 0.0) || !(z < 1.0)) throw DomainError("d2_I: z must lie in [0, 1)");
  const double z2 = z * z;
  double t = 1.0, s = 0.0;
  for (int k = 1; k < 1000000; ++k) {
    t *= (k - 0.5) / k * z2;
    const double term = t / k;
    s += term;
    if (term <= 1e-17 * s) return -0.5 * s;
  }
  throw ConvergenceError("d2_I_series did not converge");
}

double d2_J_closed(int n, double z) {
  if (n < 1) throw DomainError("d2_J: n must be positive");
  if (!(z >= 0.0) || !(z < 1.0)) throw DomainError("d2_J: z must lie in [0, 1)");
  const double s = std::sqrt(1.0 - z * z);
  // (1 - s)/(1 + s) = z^2 / (1 + s)^2
  return 2.0 / n * std::pow(z / (1.0 + s), n);
}

double d2_J_series(int n, double z) {
  if (n < 1) throw DomainError("d2_J: n must be positive");
  if (!(z >= 0.0) || !(z < 1.0)) throw DomainError("d2_J: z must lie in [0, 1)");
  const double z2 = z * z;
  double a = std::pow(z, n);
  double s = a / n;
  for (int k = 1; k < 1000000; ++k) {
    a *= (0.5 * (n + 1) + k - 1) * (0.5 * (n + 2) + k - 1) / (k * (n + k)) * z2;
    const double term = a / (2.0 * k + n);
    s += term;
    if (term <= 1e-17 * s) return std::ldexp(s, 1 - n);
  }
  throw ConvergenceError("d2_J_series did not converge");
}

D2Kernel d2_lambda_check(double r, double r_prime, double psi) {
  D2Kernel k = d2_kernel(r, r_prime);
  if (std::min(r, r_prime) == 0.0) return k;  // z_+- = 0, both logarithms vanish
  const double rl = std::min(r, r_prime);
  const double rg = std::max(r, r_prime);
  const double chl = std::cosh(rl), chg = std::cosh(rg);
  const double chch = std::cosh(r) * std::cosh(r_prime);
  const double tl = std::tanh(0.5 * rl), tg = std::tanh(0.5 * rg);
  // Constant terms I_+- and cosine-series ratios w_+-^{1/2}.
  // cosh r cosh r' - 1 = 2 sinh^2((r - r')/2) + sinh r sinh r'
  const double chch_m1 = 2.0 * sinh2_half(r - r_prime) + std::sinh(r) * std::sinh(r_prime);
  const double I_plus = -std::numbers::ln2 + std::log((chg + 1.0) * (chl + 1.0) / (chch + 1.0));
  const double I_minus = -std::numbers::ln2 + std::log((chg - 1.0) * (chl + 1.0) / chch_m1);
  const double sqrt_w_plus = tl * tg;
  const double sqrt_w_minus = tl / tg;
  auto cos_series = [&](double q, int& used) {
    double s = 0.0, qn = 1.0;
    for (int n = 1; n < 100000; ++n) {
      qn *= q;
      s -= 2.0 * std::cos(n * psi) * qn / n;
      const double tail = 2.0 * qn * q / ((n + 1) * (1.0 - q));
      if (tail <= 1e-15) {
        used = std::max(used, n);
        return s;
      }
    }
    throw ConvergenceError("d2_lambda_check: cosine series did not converge");
  };
  int used = 0;
  k.lambda_plus = I_plus + cos_series(sqrt_w_plus, used);
  k.lambda_minus = I_minus + cos_series(sqrt_w_minus, used);
  k.terms_used = used;
  return k;
}

// ---- quadrature ------------------------------------------------------------

double fourier_quadrature(int d, int m, const geometry::ABQuantities& ab, greens::Representation rep) {
  if (d < 2) throw DomainError("fourier_quadrature: d must be at least 2");
  if (m < 0) throw DomainError("fourier_quadrature: m must be nonnegative");
  if (!(ab.gap > kTouchingGap)) {
    throw SingularityError("fourier_quadrature: A - B - 1 <= 1e-10, the points touch at psi = 0");
  }
  if (!(ab.B > 0.0)) {
    return m == 0 ? greens::I_d(d, geometry::acosh1p(ab.gap), rep) : 0.0;
  }
  const double gap = ab.gap, B = ab.B;
  auto f = [=](double psi) {
    const double s = std::sin(0.5 * psi);
    return greens::I_d(d, geometry::acosh1p(gap + 2.0 * B * s * s), rep) * std::cos(m * psi);
  };
  std::vector<double> breaks;
  if (gap < 2.0 * B) {
    const double psi_star = 2.0 * std::asin(std::sqrt(gap / (2.0 * B)));
    if (psi_star < 0.5) breaks = quad::geometric_breakpoints(0.0, kPi, psi_star);
  }
  quad::Options opt;
  opt.abs_tol = 1e-11;
  opt.rel_tol = 1e-13;
  opt.max_evals = 200000;
  const quad::Result res = quad::integrate(f, 0.0, kPi, opt, breaks);
  if (!res.converged) throw ConvergenceError("fourier_quadrature: adaptive quadrature did not converge");
  return (m == 0 ? 1.0 : 2.0) / kPi * res.value;
}

double fourier_quadrature(int d, int m, double r, double r_prime, const std::vector<double>& theta,
                          const std::vector<double>& theta_p, greens::Representation rep) {
  if (static_cast<int>(theta.size()) != d - 2 || static_cast<int>(theta_p.size()) != d - 2) {
    throw DomainError("fourier_quadrature: expected d - 2 theta angles per point");
  }
  return fourier_quadrature(d, m, geometry::ab_quantities(r, r_prime, theta, theta_p), rep);
}

// ---- d = 3 elliptic --------------------------------------------------------

EllipticReduction bf_reduce(double A, double B) {
  geometry::ABQuantities ab;
  ab.A = A;
  ab.B = B;
  ab.gap = A - B - 1.0;
  return bf_reduce(ab);
}

EllipticReduction bf_reduce(const geometry::ABQuantities& ab) {
  return to_public(reduce<double>(ab.A, ab.B, ab.gap));
}

std::vector<double> bf_V_sequence(int jmax, const EllipticReduction& red) {
  if (jmax < 0) throw DomainError("bf_V: j must be nonnegative");
  return v_sequence<double>(jmax, from_public(red)).V;
}

double bf_V(int j, const EllipticReduction& red) { return bf_V_sequence(j, red).back(); }

double quartic_moment(int p, const EllipticReduction& red) {
  if (p < 0) throw DomainError("quartic_moment: p must be nonnegative");
  const Reduction<double> r = from_public(red);
  return moment(p, r, v_sequence<double>(p, r).V);
}

double quartic_moment_special(int p, const EllipticReduction& red) {
  const auto V = bf_V_sequence(2, red);
  const double a2 = red.alpha2, a1 = red.alpha1_2, h = red.alpha2_minus_alpha1_2;
  switch (p) {
    case 0: return red.g * V[0];
    case 1: return red.c * red.g / a2 * (a1 * V[0] + h * V[1]);
    case 2: return red.c * red.c * red.g / (a2 * a2) * (a1 * a1 * V[0] + 2.0 * a1 * h * V[1] + h * h * V[2]);
    default: throw DomainError("quartic_moment_special: p must be 0, 1 or 2");
  }
}

std::vector<double> chebyshev_monomial_coefficients(int m) {
  if (m < 0) throw DomainError("chebyshev_monomial_coefficients: m must be nonnegative");
  return chebyshev_coeffs<double>(m);
}

double fourier_d3_elliptic(int m, const geometry::ABQuantities& ab) {
  if (m < 0) throw DomainError("fourier_d3_elliptic: m must be nonnegative");
  if (!(ab.gap > kTouchingGap)) throw SingularityError("fourier_d3_elliptic: A - B - 1 <= 1e-10");
  if (!(ab.B > 0.0)) return m == 0 ? greens::I_d(3, geometry::acosh1p(ab.gap)) : 0.0;
  return d3_elliptic_tiered(m, ab);
}

double fourier_d3_elliptic(int m, double r, double r_prime, double theta, double theta_p) {
  return fourier_d3_elliptic(m, geometry::ab_quantities(r, r_prime, {theta}, {theta_p}));
}

double fourier_d3_m0_closed(const geometry::ABQuantities& ab) {
  if (!(ab.gap > kTouchingGap)) throw SingularityError("fourier_d3_m0_closed: A - B - 1 <= 1e-10");
  if (!(ab.B > 0.0)) return greens::I_d(3, geometry::acosh1p(ab.gap));
  const Reduction<double> r = reduce<double>(ab.A, ab.B, ab.gap);
  const double K = specfun::elliptic_K_kc2(r.kc2);
  const double Pi = specfun::elliptic_Pi_kc2(r.alpha2, r.e, r.kc2);
  const double root = std::sqrt((ab.gap + 2.0) * (ab.gap + 2.0 * ab.B));  // sqrt((A-B+1)(A+B-1))
  return -1.0 + 2.0 * K / (kPi * root) + 2.0 * ab.gap * Pi / (kPi * root);
}

double fourier_d3_m0_closed(double r, double r_prime, double theta, double theta_p) {
  check_radii(r, r_prime);
  const double shsh = std::sinh(r) * std::sinh(r_prime);
  // cosh r cosh r' - sinh r sinh r' cos(theta -+ theta') - 1
  const double minus_m1 = 2.0 * sinh2_half(r - r_prime) + 2.0 * shsh * std::pow(std::sin(0.5 * (theta - theta_p)), 2);
  const double plus_m1 = 2.0 * sinh2_half(r - r_prime) + 2.0 * shsh * std::pow(std::sin(0.5 * (theta + theta_p)), 2);
  if (!(minus_m1 > kTouchingGap)) throw SingularityError("fourier_d3_m0_closed: A - B - 1 <= 1e-10");
  const double B = shsh * std::sin(theta) * std::sin(theta_p);
  if (!(B > 0.0)) return greens::I_d(3, geometry::acosh1p(minus_m1));
  const double k2 = 4.0 * B / (plus_m1 * (minus_m1 + 2.0));
  const double alpha2 = 2.0 * B / plus_m1;
  const double K = specfun::elliptic_K(std::sqrt(k2));
  const double Pi = specfun::elliptic_Pi(alpha2, std::sqrt(k2));
  return -1.0 + 2.0 / kPi * (K + minus_m1 * Pi) / std::sqrt(minus_m1 + 2.0) / std::sqrt(plus_m1);
}

double euclid_g3_m0(double r, double r_prime, double theta, double theta_p) {
  check_radii(r, r_prime);
  const double D = r * r + r_prime * r_prime - 2.0 * r * r_prime * std::cos(theta + theta_p);
  if (!(D > 0.0)) throw SingularityError("euclid_g3_m0: degenerate geometry");
  const double k2 = 4.0 * r * r_prime * std::sin(theta) * std::sin(theta_p) / D;
  if (!(k2 < 1.0)) throw SingularityError("euclid_g3_m0: coincident points");
  return 2.0 / (kPi * std::sqrt(D)) * specfun::elliptic_K(std::sqrt(std::max(0.0, k2)));
}

// ---- resummation -----------------------------------------------------------

double decay_ratio(const geometry::ABQuantities& ab) {
  if (!(ab.B > 0.0)) return 0.0;
  if (!(ab.gap > 0.0)) return 1.0;
  return std::exp(-geometry::acosh1p(ab.gap / ab.B));
}

SeriesEval resum(const std::vector<double>& coeffs, double psi, double analytic_ratio, double tol) {
  SeriesEval out;
  double sum = 0.0, comp = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const double y = coeffs[m] * std::cos(static_cast<double>(m) * psi) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  out.value = sum;
  out.terms_used = static_cast<int>(coeffs.size());
  double q = analytic_ratio;
  const std::size_t n = coeffs.size();
  for (std::size_t m = (n > 3 ? n - 3 : 1); m < n; ++m) {
    if (coeffs[m - 1] != 0.0) q = std::max(q, std::fabs(coeffs[m] / coeffs[m - 1]));
  }
  if (n == 0 || q >= 1.0) {
    out.tail_estimate = std::numeric_limits<double>::infinity();
    out.converged = false;
    return out;
  }
  out.tail_estimate = std::fabs(coeffs.back()) * q / (1.0 - q);
  out.converged = out.tail_estimate <= tol * std::fabs(out.value);
  return out;
}

FourierSeries fourier_series(int d, double r, double r_prime, const std::vector<double>& theta,
                             const std::vector<double>& theta_p, double psi, double tol, int max_terms) {
  if (d < 2) throw DomainError("fourier_series: d must be at least 2");
  if (static_cast<int>(theta.size()) != d - 2 || static_cast<int>(theta_p.size()) != d - 2) {
    throw DomainError("fourier_series: expected d - 2 theta angles per point");
  }
  if (!(tol > 0.0)) throw DomainError("fourier_series: tol must be positive");
  const geometry::ABQuantities ab = geometry::ab_quantities(r, r_prime, theta, theta_p);
  const double q = decay_ratio(ab);
  FourierSeries fs;
  for (int m = 0; m < max_terms; ++m) {
    double c;
    Method how;
    if (d == 2) {
      c = fourier_d2(m, r, r_prime);
      how = Method::closed_d2;
    } else if (d == 3 && m <= 12 && ab.B > 0.0) {
      c = fourier_d3_elliptic(m, ab);
      how = Method::elliptic_d3;
    } else {
      c = fourier_quadrature(d, m, ab);
      how = Method::quadrature;
    }
    fs.coeffs.push_back(c);
    fs.methods.push_back(how);
    if (m >= 2) {
      fs.eval = resum(fs.coeffs, psi, q, tol);
      if (fs.eval.converged) return fs;
    }
  }
  fs.eval = resum(fs.coeffs, psi, q, tol);
  return fs;
}

} // namespace hypgreen::fourier
