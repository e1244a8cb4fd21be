#pragma once

namespace hypgreen {

/// A truncated expansion: partial sum, number of terms summed, and an estimate
/// of the neglected remainder.
struct SeriesEval {
  double value = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

} // namespace hypgreen
