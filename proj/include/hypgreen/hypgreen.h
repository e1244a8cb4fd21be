/* C interface to the hypgreen library.
 *
 * Every call takes an opaque context, writes results through out-pointers and
 * returns a status code. On failure the context keeps a message retrievable
 * with hg_last_error(). Contexts are independent; one context must not be used
 * from two threads at once.
 */
#ifndef HYPGREEN_H
#define HYPGREEN_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HYPGREEN_BUILDING_LIBRARY)
#define HG_API __attribute__((visibility("default")))
#else
#define HG_API
#endif

typedef enum hg_status {
  HG_OK = 0,
  HG_VALIDATION_FAILED = 1,
  HG_DOMAIN_ERROR = 2, /* includes coincident points ("singularity: ...") */
  HG_CONVERGENCE_ERROR = 3,
  HG_IO_ERROR = 4
} hg_status;

typedef enum hg_representation {
  HG_REP_FINITE = 0,
  HG_REP_HYP2F1_A = 1,
  HG_REP_HYP2F1_B = 2,
  HG_REP_LEGENDRE_Q = 3
} hg_representation;

typedef enum hg_fourier_method {
  HG_METHOD_CLOSED_D2 = 0,
  HG_METHOD_QUADRATURE = 1,
  HG_METHOD_ELLIPTIC_D3 = 2
} hg_fourier_method;

typedef struct hg_context hg_context;

typedef struct hg_series_result {
  double value;
  int terms_used;
  double tail_estimate;
  int converged;
} hg_series_result;

typedef struct hg_check_result {
  const char* suite;
  const char* name;
  double measured;
  double threshold;
  double seconds;
  int passed;
  const char* note;
  const char* line; /* formatted one-line report */
} hg_check_result;

typedef void (*hg_check_callback)(const hg_check_result* result, void* user);

HG_API hg_context* hg_context_create(void);
HG_API void hg_context_destroy(hg_context* ctx);
/* Message of the last failed call on ctx, "" if none. Valid until the next call. */
HG_API const char* hg_last_error(const hg_context* ctx);
HG_API const char* hg_version_string(void);

/* Representation and method names as used on the command line; NULL when out of range. */
HG_API const char* hg_representation_name(int rep);
HG_API hg_status hg_parse_representation(hg_context* ctx, const char* name, int* rep);
HG_API const char* hg_method_name(int method);

/* h^d = I_d(rho) at unit radius. */
HG_API hg_status hg_unit_h(hg_context* ctx, int d, double rho, int rep, double* out);
/* H_R^d from the unit-radius geodesic distance rho. */
HG_API hg_status hg_eval(hg_context* ctx, int d, double R, double rho, int rep, double* out);
/* H_R^d for two ambient points x, y (d + 1 coordinates each) on the R-hyperboloid. */
HG_API hg_status hg_fundamental_H(hg_context* ctx, int d, double R, const double* x, const double* y, int rep,
                                  double* out);
/* Unit-radius geodesic distance for radii r, r' and separation angle gamma. */
HG_API hg_status hg_separation_rho(hg_context* ctx, double r, double r_prime, double gamma, double* rho);
/* Euclidean fundamental solution at separation dist. */
HG_API hg_status hg_euclid_G(hg_context* ctx, int d, double dist, double* out);

/* Azimuthal Fourier coefficient H_m of h^d; theta and theta_p hold d - 2 angles each. */
HG_API hg_status hg_fourier(hg_context* ctx, int d, int m, double r, double r_prime, const double* theta,
                            const double* theta_p, int method, double* out);
/* Fourier series of h^d resummed at psi = phi - phi'. */
HG_API hg_status hg_fourier_resum(hg_context* ctx, int d, double r, double r_prime, const double* theta,
                                  const double* theta_p, double psi, double tol, int max_terms,
                                  hg_series_result* out);

HG_API hg_status hg_radial_ul(hg_context* ctx, int d, double R, int l, double r, double r_prime, double* out);
HG_API hg_status hg_discontinuity_check(hg_context* ctx, int d, double R, int l, double r_prime, double* out);
/* Gegenbauer expansion of H_R^d. */
HG_API hg_status hg_gegenbauer_series(hg_context* ctx, int d, double R, double r, double r_prime, double gamma,
                                      double tol, hg_series_result* out);
/* d = 3 addition theorem for H_m. */
HG_API hg_status hg_addition_theorem(hg_context* ctx, int m, double r, double r_prime, double theta, double theta_p,
                                     double tol, hg_series_result* out);
/* Both sides of the general-mu conjecture; *chebyshev_limit is set when mu = 0 was used. */
HG_API hg_status hg_conjecture(hg_context* ctx, double mu, double r, double r_prime, double gamma, double tol,
                               double* lhs, hg_series_result* rhs, int* chebyshev_limit);

/* Runs a validation suite ("all", "representations", "wronskian", "fourier",
 * "gegenbauer", "addition", "limits"). loosen_to > 0 raises every threshold to
 * at least that value. Returns HG_OK when every check passes, HG_VALIDATION_FAILED
 * otherwise, HG_DOMAIN_ERROR for an unknown suite. callback may be NULL. */
HG_API hg_status hg_validate(hg_context* ctx, const char* suite, double loosen_to, hg_check_callback callback,
                             void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* HYPGREEN_H */
