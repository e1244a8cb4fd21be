#pragma once

#include <cmath>
#include <limits>

#include "hypgreen/errors.hpp"

namespace hypgreen {

/// A real number held as sign * exp(log_abs). Used where Legendre functions of
/// large order or hypergeometric sums would over- or underflow a double.
struct SignedLog {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static SignedLog from_double(double v) {
    if (v == 0.0) return {};
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
  }
  static SignedLog zero() { return {}; }

  [[nodiscard]] bool is_zero() const { return sign == 0; }

  /// Converts back to double; throws ConvergenceError on overflow.
  [[nodiscard]] double value() const {
    if (sign == 0) return 0.0;
    if (log_abs > 709.78) throw ConvergenceError("overflow: value exceeds double range");
    return sign * std::exp(log_abs);
  }

  friend SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }
  friend SignedLog operator/(SignedLog a, SignedLog b) {
    if (b.sign == 0) throw DomainError("division by zero in SignedLog");
    if (a.sign == 0) return {};
    return {a.log_abs - b.log_abs, a.sign * b.sign};
  }
  friend SignedLog operator+(SignedLog a, SignedLog b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.log_abs < b.log_abs) std::swap(a, b);
    const double ratio = std::exp(b.log_abs - a.log_abs);
    const double m = a.sign + b.sign * ratio;
    if (m == 0.0) return {};
    return {a.log_abs + std::log(std::fabs(m)), a.sign * (m > 0 ? 1 : -1)};
  }
  friend SignedLog operator-(SignedLog a, SignedLog b) {
    b.sign = -b.sign;
    return a + b;
  }
};

} // namespace hypgreen
