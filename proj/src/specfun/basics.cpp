#include <cmath>
#include <numbers>

#include "hypgreen/specfun.hpp"

namespace hypgreen::specfun {

int neumann_eps(int n) {
  if (n < 0) throw DomainError("neumann_eps: n must be nonnegative");
  return n == 0 ? 1 : 2;
}

double double_factorial(int n) {
  if (n < -1) throw DomainError("double_factorial: n must be >= -1");
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

double pochhammer(double a, int k) {
  if (k < 0) throw DomainError("pochhammer: k must be nonnegative");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

bool is_nonpositive_integer(double x) {
  return x <= 0.5 && std::fabs(x - std::round(x)) < 1e-12;
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("gamma_fn: pole at nonpositive integer");
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

SignedLog gamma_signed_log(double x) {
  if (is_nonpositive_integer(x)) return SignedLog::zero();
  int sign = 1;
  if (x < 0) {
    // Gamma alternates sign between consecutive negative integers.
    const double f = std::floor(-x);
    sign = (static_cast<long long>(f) % 2 == 0) ? -1 : 1;
  }
  return {std::lgamma(x), sign};
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("digamma: pole at nonpositive integer");
  if (x < 0) {
    // Reflection.
    return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Asymptotic series with Bernoulli numbers B_2..B_12.
  const double tail =
      inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * 691.0 / 32760)))));
  return acc + std::log(x) - 0.5 * inv - tail;
}

} // namespace hypgreen::specfun
