#include "hypgreen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace hypgreen::quad {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[i] * s;
    if (i % 2 == 1) g += kWg[i / 2] * s;
  }
  return {a, b, k * h, std::fabs((k - g) * h)};
}

} // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opt,
                 const std::vector<double>& breakpoints) {
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  std::sort(cuts.begin() + 1, cuts.end());
  cuts.push_back(b);

  std::priority_queue<Segment> heap;
  Result res;
  double total = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    const Segment s = kronrod15(f, cuts[i], cuts[i + 1]);
    res.evaluations += 15;
    total += s.value;
    error += s.error;
    heap.push(s);
  }
  // Segments too narrow to split further are set aside with their error.
  double frozen_error = 0.0, frozen_value = 0.0;
  while (!heap.empty()) {
    if (error + frozen_error <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) break;
    if (res.evaluations + 30 > opt.max_evals) break;
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) || worst.b - worst.a < 1e-14 * (std::fabs(a) + std::fabs(b))) {
      error -= worst.error;
      frozen_error += worst.error;
      frozen_value += worst.value;
      continue;
    }
    const Segment left = kronrod15(f, worst.a, mid);
    const Segment right = kronrod15(f, mid, worst.b);
    res.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the leaves to drop the drift of the incremental updates.
  double sum = frozen_value, err = frozen_error;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  res.value = sum;
  res.abs_error = err;
  res.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(sum));
  return res;
}

std::vector<double> geometric_breakpoints(double a, double b, double scale) {
  std::vector<double> pts;
  if (!(scale > 0.0)) return pts;
  for (double off = scale; a + off < b; off *= 4.0) {
    if (off > 1e-12 * (b - a)) pts.push_back(a + off);
  }
  return pts;
}

} // namespace hypgreen::quad
