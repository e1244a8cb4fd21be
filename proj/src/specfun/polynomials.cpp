#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hypgreen/specfun.hpp"

namespace hypgreen::specfun {

namespace {

void check_unit_interval(double x, const char* who) {
  if (!(x >= -1.0 - 1e-14) || !(x <= 1.0 + 1e-14)) {
    throw DomainError(std::string(who) + ": argument must lie in [-1, 1]");
  }
}

} // namespace

double chebyshev_T(int n, double x) {
  if (n < 0) throw DomainError("chebyshev_T: n must be nonnegative");
  check_unit_interval(x, "chebyshev_T");
  if (n == 0) return 1.0;
  double t0 = 1.0, t1 = x;
  for (int k = 1; k < n; ++k) {
    const double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

void gegenbauer_C_sequence(int lmax, double mu, double x, std::vector<double>& out) {
  if (lmax < 0) throw DomainError("gegenbauer_C: l must be nonnegative");
  if (!(mu > -0.5)) throw DomainError("gegenbauer_C: mu must exceed -1/2");
  check_unit_interval(x, "gegenbauer_C");
  out.assign(static_cast<std::size_t>(lmax) + 1, 0.0);
  out[0] = 1.0;
  if (lmax == 0) return;
  out[1] = 2.0 * mu * x;
  for (int l = 2; l <= lmax; ++l) {
    out[l] = (2.0 * x * (l + mu - 1.0) * out[l - 1] - (l + 2.0 * mu - 2.0) * out[l - 2]) / l;
  }
}

double gegenbauer_C(int l, double mu, double x) {
  std::vector<double> seq;
  gegenbauer_C_sequence(l, mu, x, seq);
  return seq.back();
}

double legendre_P(int l, double x) { return gegenbauer_C(l, 0.5, x); }

double assoc_legendre_Plm(int l, int m, double x) {
  if (l < 0) throw DomainError("assoc_legendre_Plm: l must be nonnegative");
  check_unit_interval(x, "assoc_legendre_Plm");
  if (std::abs(m) > l) return 0.0;
  if (m < 0) {
    const int k = -m;
    double ratio = 1.0;  // (l-k)!/(l+k)!
    for (int i = l - k + 1; i <= l + k; ++i) ratio /= i;
    return ((k % 2 == 0) ? 1.0 : -1.0) * ratio * assoc_legendre_Plm(l, k, x);
  }
  const double sx = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * sx;
  if (l == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double next = (x * (2.0 * ll - 1.0) * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = next;
  }
  return pm1;
}

} // namespace hypgreen::specfun
