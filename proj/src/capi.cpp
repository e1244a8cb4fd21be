#include "hypgreen/hypgreen.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "hypgreen/errors.hpp"
#include "hypgreen/fourier.hpp"
#include "hypgreen/gegenbauer.hpp"
#include "hypgreen/geometry.hpp"
#include "hypgreen/greens.hpp"
#include "hypgreen/validation.hpp"

struct hg_context {
  std::string last_error;
};

namespace {

using namespace hypgreen;

constexpr int kRepCount = 4;
constexpr int kMethodCount = 3;

// Runs fn, translating exceptions into status codes and the context message.
template <class Fn>
hg_status guarded(hg_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return HG_DOMAIN_ERROR;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const DomainError& e) {
    ctx->last_error = e.what();
    return HG_DOMAIN_ERROR;
  } catch (const ConvergenceError& e) {
    ctx->last_error = e.what();
    return HG_CONVERGENCE_ERROR;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return HG_DOMAIN_ERROR;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return HG_CONVERGENCE_ERROR;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return HG_CONVERGENCE_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

greens::Representation to_rep(int rep) {
  require(rep >= 0 && rep < kRepCount, "unknown representation code");
  return greens::kAllRepresentations[rep];
}

fourier::Method to_method(int method) {
  require(method >= 0 && method < kMethodCount, "unknown Fourier method code");
  static constexpr fourier::Method methods[] = {fourier::Method::closed_d2, fourier::Method::quadrature,
                                                fourier::Method::elliptic_d3};
  return methods[method];
}

std::vector<double> angles(const double* p, int n) {
  require(n == 0 || p != nullptr, "angle array must not be null");
  return std::vector<double>(p, p + n);
}

void store(hg_series_result* out, const SeriesEval& s) {
  out->value = s.value;
  out->terms_used = s.terms_used;
  out->tail_estimate = s.tail_estimate;
  out->converged = s.converged ? 1 : 0;
}

} // namespace

extern "C" {

hg_context* hg_context_create(void) { return new (std::nothrow) hg_context(); }

void hg_context_destroy(hg_context* ctx) { delete ctx; }

const char* hg_last_error(const hg_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* hg_version_string(void) { return "1.0.0"; }

const char* hg_representation_name(int rep) {
  if (rep < 0 || rep >= kRepCount) return nullptr;
  return greens::representation_name(greens::kAllRepresentations[rep]);
}

hg_status hg_parse_representation(hg_context* ctx, const char* name, int* rep) {
  return guarded(ctx, [&] {
    require(name != nullptr && rep != nullptr, "null argument");
    const auto r = greens::parse_representation(name);
    for (int i = 0; i < kRepCount; ++i) {
      if (greens::kAllRepresentations[i] == r) *rep = i;
    }
    return HG_OK;
  });
}

const char* hg_method_name(int method) {
  if (method < 0 || method >= kMethodCount) return nullptr;
  return fourier::method_name(to_method(method));
}

hg_status hg_unit_h(hg_context* ctx, int d, double rho, int rep, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = greens::I_d(d, rho, to_rep(rep));
    return HG_OK;
  });
}

hg_status hg_eval(hg_context* ctx, int d, double R, double rho, int rep, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = greens::fundamental_H_rho(d, R, rho, to_rep(rep));
    return HG_OK;
  });
}

hg_status hg_fundamental_H(hg_context* ctx, int d, double R, const double* x, const double* y, int rep, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr && x != nullptr && y != nullptr, "null argument");
    require(d >= 2, "d must be at least 2");
    geometry::AmbientPoint a{std::vector<double>(x, x + d + 1), R};
    geometry::AmbientPoint b{std::vector<double>(y, y + d + 1), R};
    *out = greens::fundamental_H(d, R, a, b, to_rep(rep));
    return HG_OK;
  });
}

hg_status hg_separation_rho(hg_context* ctx, double r, double r_prime, double gamma, double* rho) {
  return guarded(ctx, [&] {
    require(rho != nullptr, "null output");
    require(r >= 0.0 && r_prime >= 0.0 && std::isfinite(r) && std::isfinite(r_prime), "radii must be nonnegative");
    require(gamma >= 0.0 && gamma <= 3.141592653589793238, "gamma must lie in [0, pi]");
    *rho = geometry::acosh1p(geometry::cosh_rho_m1(r, r_prime, gamma));
    return HG_OK;
  });
}

hg_status hg_euclid_G(hg_context* ctx, int d, double dist, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = greens::euclid_G_dist(d, dist);
    return HG_OK;
  });
}

hg_status hg_fourier(hg_context* ctx, int d, int m, double r, double r_prime, const double* theta,
                     const double* theta_p, int method, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    require(d >= 2, "d must be at least 2");
    const auto th = angles(theta, d - 2), thp = angles(theta_p, d - 2);
    switch (to_method(method)) {
      case fourier::Method::closed_d2:
        require(d == 2, "the closed form applies to d = 2 only");
        *out = fourier::fourier_d2(m, r, r_prime);
        break;
      case fourier::Method::elliptic_d3:
        require(d == 3, "the elliptic assembly applies to d = 3 only");
        *out = fourier::fourier_d3_elliptic(m, r, r_prime, th[0], thp[0]);
        break;
      case fourier::Method::quadrature:
        *out = fourier::fourier_quadrature(d, m, r, r_prime, th, thp);
        break;
    }
    return HG_OK;
  });
}

hg_status hg_fourier_resum(hg_context* ctx, int d, double r, double r_prime, const double* theta,
                           const double* theta_p, double psi, double tol, int max_terms, hg_series_result* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    require(d >= 2, "d must be at least 2");
    require(max_terms >= 3, "max_terms must be at least 3");
    const auto fs = fourier::fourier_series(d, r, r_prime, angles(theta, d - 2), angles(theta_p, d - 2), psi, tol,
                                            max_terms);
    store(out, fs.eval);
    return HG_OK;
  });
}

hg_status hg_radial_ul(hg_context* ctx, int d, double R, int l, double r, double r_prime, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = gegenbauer::radial_ul(d, R, l, r, r_prime);
    return HG_OK;
  });
}

hg_status hg_discontinuity_check(hg_context* ctx, int d, double R, int l, double r_prime, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = gegenbauer::discontinuity_check(d, R, l, r_prime);
    return HG_OK;
  });
}

hg_status hg_gegenbauer_series(hg_context* ctx, int d, double R, double r, double r_prime, double gamma, double tol,
                               hg_series_result* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    store(out, gegenbauer::gegenbauer_series(d, R, r, r_prime, gamma, tol));
    return HG_OK;
  });
}

hg_status hg_addition_theorem(hg_context* ctx, int m, double r, double r_prime, double theta, double theta_p,
                              double tol, hg_series_result* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    store(out, gegenbauer::addition_theorem_H3(m, r, r_prime, theta, theta_p, tol));
    return HG_OK;
  });
}

hg_status hg_conjecture(hg_context* ctx, double mu, double r, double r_prime, double gamma, double tol, double* lhs,
                        hg_series_result* rhs, int* chebyshev_limit) {
  return guarded(ctx, [&] {
    require(lhs != nullptr && rhs != nullptr, "null output");
    const auto c = gegenbauer::conjecture_check(mu, r, r_prime, gamma, tol);
    *lhs = c.lhs;
    store(rhs, c.rhs);
    if (chebyshev_limit) *chebyshev_limit = c.chebyshev_limit ? 1 : 0;
    return HG_OK;
  });
}

hg_status hg_validate(hg_context* ctx, const char* suite, double loosen_to, hg_check_callback callback, void* user,
                      int* all_passed) {
  return guarded(ctx, [&] {
    require(suite != nullptr, "null suite name");
    if (!validation::is_suite(suite)) throw DomainError(std::string("unknown suite '") + suite + "'");
    bool ok = true;
    validation::run_suite(suite, loosen_to, [&](const validation::CheckResult& r) {
      ok = ok && r.passed;
      if (callback) {
        const std::string line = validation::format_result(r);
        const hg_check_result c{r.suite.c_str(), r.name.c_str(), r.measured, r.threshold, r.seconds,
                                r.passed ? 1 : 0, r.note.c_str(), line.c_str()};
        callback(&c, user);
      }
    });
    if (all_passed) *all_passed = ok ? 1 : 0;
    return ok ? HG_OK : HG_VALIDATION_FAILED;
  });
}

} // extern "C"
