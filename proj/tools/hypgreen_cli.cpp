// Command-line front end. Talks to the library only through the C interface.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "hypgreen/hypgreen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

using Context = std::unique_ptr<hg_context, decltype(&hg_context_destroy)>;

const char* kind_of(int code) {
  switch (code) {
    case HG_DOMAIN_ERROR: return "domain";
    case HG_CONVERGENCE_ERROR: return "convergence";
    case HG_IO_ERROR: return "io";
    case HG_VALIDATION_FAILED: return "validation";
    default: return "unknown";
  }
}

int fail(int code, const std::string& message) {
  std::fprintf(stderr, "error code=%d kind=%s message=\"%s\"\n", code, kind_of(code), message.c_str());
  return code;
}

// Thrown out of command bodies to unwind with an exit status.
struct Exit {
  int code;
};

void check(hg_context* ctx, hg_status s) {
  if (s != HG_OK) throw Exit{fail(s, hg_last_error(ctx))};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

double max_rel_dev(const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double scale = std::max(std::fabs(v[i]), std::fabs(v[j]));
      if (scale > 0.0) worst = std::max(worst, std::fabs(v[i] - v[j]) / scale);
    }
  }
  return worst;
}

std::vector<int> representations(hg_context* ctx, const std::string& name) {
  if (name == "all") return {HG_REP_FINITE, HG_REP_HYP2F1_A, HG_REP_HYP2F1_B, HG_REP_LEGENDRE_Q};
  int rep = 0;
  check(ctx, hg_parse_representation(ctx, name.c_str(), &rep));
  return {rep};
}

void print_series(const char* tag, const hg_series_result& s) {
  std::printf("%s %s terms_used=%d tail_estimate=%.3e converged=%s\n", num(s.value).c_str(), tag, s.terms_used,
              s.tail_estimate, s.converged ? "yes" : "no");
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  int d = 3;
  double R = 1.0;
  std::optional<double> rho, r, rp, gamma;
  std::string rep = "finite";
};

double resolve_rho(hg_context* ctx, const std::optional<double>& rho, const std::optional<double>& r,
                   const std::optional<double>& rp, const std::optional<double>& gamma) {
  if (rho) return *rho;
  if (!r || !rp || !gamma) throw Exit{fail(kExitDomain, "give --rho or all of --r, --rp, --gamma")};
  double out = 0.0;
  check(ctx, hg_separation_rho(ctx, *r, *rp, *gamma, &out));
  return out;
}

int cmd_eval(hg_context* ctx, const EvalArgs& a) {
  const double rho = resolve_rho(ctx, a.rho, a.r, a.rp, a.gamma);
  const auto reps = representations(ctx, a.rep);
  std::vector<double> values;
  for (int rep : reps) {
    double h = 0.0, H = 0.0;
    check(ctx, hg_unit_h(ctx, a.d, rho, rep, &h));
    check(ctx, hg_eval(ctx, a.d, a.R, rho, rep, &H));
    values.push_back(h);
    std::printf("%s %s H_R=%s\n", num(h).c_str(), hg_representation_name(rep), num(H).c_str());
  }
  if (reps.size() > 1) std::printf("max_rel_deviation %.3e\n", max_rel_dev(values));
  return kExitOk;
}

// ---- fourier ---------------------------------------------------------------

struct FourierArgs {
  int d = 3;
  int m = 0;
  double r = 0.0, rp = 0.0;
  std::vector<double> theta, thetap;
  std::string method = "auto";
  std::optional<double> psi;
  double tol = 1e-10;
  int max_terms = 200;
};

int cmd_fourier(hg_context* ctx, const FourierArgs& a) {
  if (static_cast<int>(a.theta.size()) != std::max(0, a.d - 2) ||
      static_cast<int>(a.thetap.size()) != std::max(0, a.d - 2)) {
    return fail(kExitDomain, "--theta and --thetap need d - 2 values each");
  }
  if (a.psi) {
    hg_series_result s{};
    check(ctx, hg_fourier_resum(ctx, a.d, a.r, a.rp, a.theta.data(), a.thetap.data(), *a.psi, a.tol, a.max_terms, &s));
    print_series("fourier_resummed", s);
    return s.converged ? kExitOk : fail(kExitConvergence, "tail bound not reached within max_terms");
  }
  std::vector<int> methods;
  const int exact = a.d == 2 ? HG_METHOD_CLOSED_D2 : HG_METHOD_ELLIPTIC_D3;
  if (a.method == "auto") {
    methods = {a.d <= 3 ? exact : HG_METHOD_QUADRATURE};
  } else if (a.method == "both") {
    if (a.d > 3) return fail(kExitDomain, "--method both needs d = 2 or 3");
    methods = {exact, HG_METHOD_QUADRATURE};
  } else if (a.method == "closed" || a.method == "closed_d2") {
    methods = {HG_METHOD_CLOSED_D2};
  } else if (a.method == "elliptic" || a.method == "elliptic_d3") {
    methods = {HG_METHOD_ELLIPTIC_D3};
  } else if (a.method == "quadrature") {
    methods = {HG_METHOD_QUADRATURE};
  } else {
    return fail(kExitDomain, "unknown method '" + a.method + "'");
  }
  std::vector<double> values;
  for (int m : methods) {
    double v = 0.0;
    check(ctx, hg_fourier(ctx, a.d, a.m, a.r, a.rp, a.theta.data(), a.thetap.data(), m, &v));
    values.push_back(v);
    std::printf("%s %s m=%d\n", num(v).c_str(), hg_method_name(m), a.m);
  }
  if (values.size() > 1) std::printf("max_rel_deviation %.3e\n", max_rel_dev(values));
  return kExitOk;
}

// ---- series / addition / conjecture ----------------------------------------

struct SeriesArgs {
  int d = 3;
  double R = 1.0;
  double r = 0.0, rp = 0.0, gamma = 0.0;
  double tol = 1e-10;
};

int cmd_series(hg_context* ctx, const SeriesArgs& a) {
  hg_series_result s{};
  check(ctx, hg_gegenbauer_series(ctx, a.d, a.R, a.r, a.rp, a.gamma, a.tol, &s));
  print_series("gegenbauer", s);
  return s.converged ? kExitOk : fail(kExitConvergence, "tail bound not reached");
}

struct AdditionArgs {
  int m = 0;
  double r = 0.0, rp = 0.0, theta = 0.0, thetap = 0.0;
  double tol = 1e-10;
};

int cmd_addition(hg_context* ctx, const AdditionArgs& a) {
  hg_series_result s{};
  check(ctx, hg_addition_theorem(ctx, a.m, a.r, a.rp, a.theta, a.thetap, a.tol, &s));
  print_series("addition_theorem", s);
  return s.converged ? kExitOk : fail(kExitConvergence, "tail bound not reached");
}

struct ConjectureArgs {
  double mu = 0.0;
  double r = 0.0, rp = 0.0, gamma = 0.0;
  double tol = 1e-10;
};

int cmd_conjecture(hg_context* ctx, const ConjectureArgs& a) {
  double lhs = 0.0;
  int cheb = 0;
  hg_series_result rhs{};
  check(ctx, hg_conjecture(ctx, a.mu, a.r, a.rp, a.gamma, a.tol, &lhs, &rhs, &cheb));
  std::printf("CONJECTURE SUPPORT (numerical evidence only, not a proof)\n");
  std::printf("mu=%s%s\n", num(a.mu).c_str(), cheb ? " (Chebyshev limit)" : "");
  std::printf("%s lhs\n", num(lhs).c_str());
  print_series("rhs", rhs);
  std::printf("rel_difference %.3e\n", lhs != 0.0 ? std::fabs(lhs - rhs.value) / std::fabs(lhs) : 0.0);
  return kExitOk;
}

// ---- grid ------------------------------------------------------------------

struct GridArgs {
  int d = 3;
  double R = 1.0;
  std::string var = "rho";
  double min = 0.0, max = 0.0;
  int count = 0;
  double r = 0.5, rp = 1.0, gamma = 1.0;
  std::string rep = "finite";
  std::string out;
};

int cmd_grid(hg_context* ctx, const GridArgs& a) {
  if (a.count < 1) return fail(kExitDomain, "--count must be at least 1");
  if (a.var != "rho" && a.var != "r" && a.var != "rp" && a.var != "gamma") {
    return fail(kExitDomain, "--var must be one of rho, r, rp, gamma");
  }
  const auto reps = representations(ctx, a.rep);
  std::string text;
  text += a.var == "rho" ? "rho" : "r,rp,gamma,rho";
  for (int rep : reps) text += std::string(",") + hg_representation_name(rep);
  if (reps.size() > 1) text += ",max_rel_deviation";
  text += "\n";
  for (int i = 0; i < a.count; ++i) {
    const double x = a.count == 1 ? a.min : a.min + (a.max - a.min) * i / (a.count - 1);
    double rho = x;
    std::string row;
    if (a.var == "rho") {
      row = num(x);
    } else {
      double r = a.r, rp = a.rp, gamma = a.gamma;
      (a.var == "r" ? r : a.var == "rp" ? rp : gamma) = x;
      check(ctx, hg_separation_rho(ctx, r, rp, gamma, &rho));
      row = num(r) + "," + num(rp) + "," + num(gamma) + "," + num(rho);
    }
    std::vector<double> values;
    for (int rep : reps) {
      double H = 0.0;
      check(ctx, hg_eval(ctx, a.d, a.R, rho, rep, &H));
      values.push_back(H);
      row += "," + num(H);
    }
    if (reps.size() > 1) row += "," + num(max_rel_dev(values));
    text += row + "\n";
  }
  // Write beside the target and rename, so a failure never leaves a partial file.
  namespace fs = std::filesystem;
  const fs::path target(a.out);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) return fail(kExitIo, "cannot write " + tmp.string());
    f << text;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return fail(kExitIo, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return fail(kExitIo, "cannot rename onto " + target.string());
  }
  std::printf("wrote %d rows to %s\n", a.count, a.out.c_str());
  return kExitOk;
}

// ---- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string suite = "all";
  double tol = 0.0;
};

int cmd_validate(hg_context* ctx, const ValidateArgs& a) {
  struct Tally {
    int total = 0, failed = 0;
  } tally;
  int all_passed = 0;
  const hg_status s = hg_validate(
      ctx, a.suite.c_str(), a.tol,
      [](const hg_check_result* r, void* user) {
        auto* t = static_cast<Tally*>(user);
        ++t->total;
        if (!r->passed) ++t->failed;
        std::printf("%s\n", r->line);
        std::fflush(stdout);
      },
      &tally, &all_passed);
  if (s == HG_DOMAIN_ERROR || s == HG_CONVERGENCE_ERROR) return fail(s, hg_last_error(ctx));
  std::printf("%d checks, %d failed\n", tally.total, tally.failed);
  return all_passed ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental solution of the Laplace-Beltrami operator on the hyperboloid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hg_version_string()));

  auto positive = CLI::PositiveNumber;
  auto nonneg = CLI::NonNegativeNumber;

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate h^d and H_R^d at a separation");
  eval->add_option("--d", ev.d, "dimension (>= 2)")->required();
  eval->add_option("--R", ev.R, "hyperboloid radius")->check(positive);
  eval->add_option("--rho", ev.rho, "unit-radius geodesic distance");
  eval->add_option("--r", ev.r, "radius of the first point")->check(nonneg);
  eval->add_option("--rp", ev.rp, "radius of the second point")->check(nonneg);
  eval->add_option("--gamma", ev.gamma, "separation angle in radians");
  eval->add_option("--rep", ev.rep, "finite, hyp2f1_a, hyp2f1_b, legendre_q or all");

  FourierArgs fo;
  auto* fourier = app.add_subcommand("fourier", "azimuthal Fourier coefficient H_m of h^d");
  fourier->add_option("--d", fo.d, "dimension (>= 2)")->required();
  fourier->add_option("--m", fo.m, "order")->check(nonneg);
  fourier->add_option("--r", fo.r)->required()->check(nonneg);
  fourier->add_option("--rp", fo.rp)->required()->check(nonneg);
  fourier->add_option("--theta", fo.theta, "d - 2 polar angles of the first point");
  fourier->add_option("--thetap", fo.thetap, "d - 2 polar angles of the second point");
  fourier->add_option("--method", fo.method, "auto, closed, elliptic, quadrature or both");
  fourier->add_option("--psi", fo.psi, "resum the series at phi - phi' instead");
  fourier->add_option("--tol", fo.tol, "relative tail target for --psi")->check(positive);
  fourier->add_option("--max-terms", fo.max_terms, "coefficient limit for --psi")->check(positive);

  SeriesArgs se;
  auto* series = app.add_subcommand("series", "Gegenbauer expansion of H_R^d");
  series->add_option("--d", se.d, "dimension (>= 3)")->required();
  series->add_option("--R", se.R)->check(positive);
  series->add_option("--r", se.r)->required()->check(positive);
  series->add_option("--rp", se.rp)->required()->check(positive);
  series->add_option("--gamma", se.gamma)->required();
  series->add_option("--tol", se.tol, "relative tail target")->check(positive);

  AdditionArgs ad;
  auto* addition = app.add_subcommand("addition", "d = 3 addition theorem for H_m");
  addition->add_option("--m", ad.m)->check(nonneg);
  addition->add_option("--r", ad.r)->required()->check(positive);
  addition->add_option("--rp", ad.rp)->required()->check(positive);
  addition->add_option("--theta", ad.theta)->required();
  addition->add_option("--thetap", ad.thetap)->required();
  addition->add_option("--tol", ad.tol)->check(positive);

  ConjectureArgs co;
  auto* conjecture = app.add_subcommand("conjecture", "numerical support for the general-mu expansion");
  conjecture->add_option("--mu", co.mu)->required();
  conjecture->add_option("--r", co.r)->required()->check(positive);
  conjecture->add_option("--rp", co.rp)->required()->check(positive);
  conjecture->add_option("--gamma", co.gamma)->required();
  conjecture->add_option("--tol", co.tol)->check(positive);

  GridArgs gr;
  auto* grid = app.add_subcommand("grid", "write H_R^d over a grid as CSV");
  grid->add_option("--d", gr.d)->required();
  grid->add_option("--R", gr.R)->check(positive);
  grid->add_option("--var", gr.var, "rho, r, rp or gamma");
  grid->add_option("--min", gr.min)->required();
  grid->add_option("--max", gr.max)->required();
  grid->add_option("--count", gr.count)->required();
  grid->add_option("--r", gr.r, "fixed r when varying another coordinate");
  grid->add_option("--rp", gr.rp, "fixed r' when varying another coordinate");
  grid->add_option("--gamma", gr.gamma, "fixed gamma when varying another coordinate");
  grid->add_option("--rep", gr.rep, "representation or all");
  grid->add_option("--out", gr.out, "output CSV path")->required();

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "run the cross-validation suite");
  validate->add_option("--suite", va.suite, "representations, fourier, gegenbauer, addition, limits, wronskian, all");
  validate->add_option("--tol", va.tol, "raise every threshold to at least this value")->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  Context ctx(hg_context_create(), &hg_context_destroy);
  if (!ctx) return fail(kExitConvergence, "cannot allocate context");
  try {
    if (*eval) return cmd_eval(ctx.get(), ev);
    if (*fourier) return cmd_fourier(ctx.get(), fo);
    if (*series) return cmd_series(ctx.get(), se);
    if (*addition) return cmd_addition(ctx.get(), ad);
    if (*conjecture) return cmd_conjecture(ctx.get(), co);
    if (*grid) return cmd_grid(ctx.get(), gr);
    if (*validate) return cmd_validate(ctx.get(), va);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitDomain;
}
