#include "doctest.h"

#include <string>

#include "hypgreen/errors.hpp"
#include "hypgreen/validation.hpp"

using namespace hypgreen;
using namespace hypgreen::validation;

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 6u);
  CHECK(is_suite("all"));
  CHECK(is_suite("limits"));
  CHECK_FALSE(is_suite("everything"));
  CHECK_THROWS_AS(run_suite("everything"), DomainError);
}

TEST_CASE("every suite passes at default thresholds") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    int reported = 0;
    const auto results = run_suite(name, 0.0, [&](const CheckResult&) { ++reported; });
    CHECK(reported == static_cast<int>(results.size()));
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      CAPTURE(format_result(r));
      CHECK(r.passed);
      CHECK(r.suite == name);
    }
  }
}

TEST_CASE("loosening raises thresholds and never tightens them") {
  const auto strict = run_suite("wronskian");
  const auto loose = run_suite("wronskian", 1e-3);
  const auto tiny = run_suite("wronskian", 1e-30);
  REQUIRE(strict.size() == loose.size());
  for (std::size_t i = 0; i < strict.size(); ++i) {
    CHECK(loose[i].threshold == std::max(strict[i].threshold, 1e-3));
    CHECK(tiny[i].threshold == strict[i].threshold);
  }
}

TEST_CASE("report lines are deterministic") {
  CheckResult r;
  r.suite = "fourier";
  r.name = "x";
  r.measured = 1.5e-12;
  r.threshold = 1e-9;
  r.seconds = 0.123;
  r.passed = true;
  r.note = "20 geometries";
  CHECK(format_result(r) == "PASS fourier/x measured=1.500e-12 threshold=1.0e-09 (20 geometries)");
  const auto a = run_suite("representations"), b = run_suite("representations");
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(format_result(a[i]) == format_result(b[i]));
}

TEST_CASE("conjecture checks are labeled as support") {
  bool found = false;
  for (const auto& r : check_conjecture()) {
    if (r.note.find("CONJECTURE SUPPORT") != std::string::npos) found = true;
  }
  CHECK(found);
}
