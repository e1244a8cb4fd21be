#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.

#include <functional>
#include <vector>

namespace hypgreen::quad {

struct Options {
  double abs_tol = 1e-11;
  double rel_tol = 0.0;
  int max_evals = 200000;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Integrates f over [a, b]. Interior breakpoints (sorted or not, points outside
/// (a, b) are ignored) seed the initial partition, which is how callers place
/// resolution next to a near-singularity. The interval with the largest error
/// estimate is bisected until the summed estimate meets the tolerance.
Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opt = {},
                 const std::vector<double>& breakpoints = {});

/// Geometric breakpoints scale * 4^k inside (a, b), for integrands with a
/// near-singularity of width `scale` at the left endpoint a.
std::vector<double> geometric_breakpoints(double a, double b, double scale);

} // namespace hypgreen::quad
