#include <doctest.h>

#include <cmath>

#include "groupopt/analysis.hpp"
#include "groupopt/optimizer.hpp"
#include "groupopt/simulation.hpp"
#include "test_support.hpp"

using namespace groupopt;

namespace {

Optimum optimize(const char* family, const char* param, double value) {
  const auto fam = make_family(family, {{param, value}});
  const auto cert = verify_conditions(fam);
  REQUIRE(cert.ok());
  return maximize(fam, cert);
}

struct Known {
  const char* family;
  const char* param;
  double value;
  double x_star;  // frozen from an independent bisection of the stationarity root
  int k_star;
};

// k_star values cross-checked against brute-force integer enumeration below.
const Known kKnown[] = {
    {"yunus", "p", 0.5, 5.134959, 5},   {"yunus", "p", 1.0, 4.616179, 5},
    {"power", "r", 0.999, 503.455970, 503}, {"power", "r", 0.501, 1.956824, 2},
    {"power", "r", 0.6, 2.265238, 2},   {"power", "r", 0.75, 3.147644, 3},
    {"power", "r", 0.9, 6.438850, 6},   {"xlnx", "p", 0.5, 5.167188, 5},
    {"xlnx", "p", 0.6, 7.589430, 8},    {"xlnx", "p", 0.75, 25.515117, 26},
    {"lnln", "p", 0.1, 18.228985, 18},  {"lnln", "p", 1.0, 22.282703, 22},
    {"lnln", "p", 10.0, 309.771089, 310}, {"combo", "p", 0.5, 6.556165, 7},
    {"combo", "p", 0.75, 18.671873, 19},
};

}  // namespace

TEST_CASE("maximizer matches the frozen oracle table") {
  for (const auto& k : kKnown) {
    CAPTURE(k.family);
    CAPTURE(k.value);
    const auto opt = optimize(k.family, k.param, k.value);
    CHECK(std::abs(opt.x_star - k.x_star) < 1e-4);
    CHECK(opt.k_star == k.k_star);
    CHECK(opt.method_agreement < 1e-6);
    CHECK(opt.x_star > opt.a);
    CHECK(opt.x_star < opt.b);

    const auto fam = make_family(k.family, {{k.param, k.value}});
    CHECK(std::abs(stationarity(fam, opt.x_star)) < 1e-9);
    // Local maximum on both sides. The probe scales with x*: at x* ~ 500 a
    // fixed 1e-4 offset changes the objective by less than double round-off.
    const double probe = 1e-4 * std::max(1.0, opt.x_star);
    CHECK(log_objective(fam, opt.x_star - probe) < log_objective(fam, opt.x_star));
    CHECK(log_objective(fam, opt.x_star + probe) < log_objective(fam, opt.x_star));
  }
}

TEST_CASE("integer recommendation equals the brute-force argmax") {
  for (const auto& k : kKnown) {
    CAPTURE(k.family);
    CAPTURE(k.value);
    const auto fam = make_family(k.family, {{k.param, k.value}});
    const auto opt = optimize(k.family, k.param, k.value);
    const int k_hi = 2 * static_cast<int>(std::ceil(opt.x_star)) + 10;
    const auto [bk, bp] = brute_force_integer_argmax(fam, 2, k_hi);
    CHECK(bk == opt.k_star);
    CHECK(opt.p_no_default == doctest::Approx(bp).epsilon(1e-12));
  }
}

TEST_CASE("boundary flags for sub-2 maximizers") {
  const auto opt = optimize("power", "r", 0.501);
  CHECK(opt.x_star == doctest::Approx(1.956824).epsilon(1e-4));
  CHECK(opt.k_star == 2);
  CHECK(opt.k_star_rounded == 2);
  CHECK(opt.k_min_boundary);
}

TEST_CASE("yunus rounding plateau and bracket containment") {
  for (double p : {0.5, 0.51, 0.52, 0.53, 0.539, 0.993, 0.997, 1.0}) {
    CAPTURE(p);
    const auto opt = optimize("yunus", "p", p);
    CHECK(opt.x_star >= 4.5);
    CHECK(opt.x_star < 5.5);
    CHECK(opt.k_star_rounded == 5);
    // Narrow-interval bound holds for every parameter value.
    CHECK(opt.x_star > 3.4);
    CHECK(opt.x_star < 5.2);
  }
}

TEST_CASE("maximize rejects an uncertified family") {
  const auto fam = make_family("power", {{"r", 1.5}});
  const auto cert = verify_conditions(fam);
  REQUIRE_FALSE(cert.ok());
  CHECK_THROWS_AS(maximize(fam, cert), domain_error);
}

TEST_CASE("maximize reports the convex-bracket defect instead of a bogus result") {
  testsupport::ensure_stub_families();
  const auto fam = make_family("quadratic", {});
  const auto cert = verify_conditions(fam);
  REQUIRE(cert.branch == Branch::convex);
  // The bracket contains a minimum of the objective, not a maximum.
  CHECK_THROWS_AS(maximize(fam, cert), domain_error);
}

TEST_CASE("sweep emits ordered, certified records") {
  const auto records = sweep("yunus", "p", 0.5, 0.51, 0.005);
  REQUIRE(records.size() == 3);
  double prev = -1.0;
  for (const auto& rec : records) {
    CHECK(rec.param_value > prev);
    prev = rec.param_value;
    REQUIRE(rec.certified);
    REQUIRE(rec.optimum.has_value());
    CHECK(rec.optimum->k_star_rounded == 5);
    CHECK(*rec.a < rec.optimum->x_star);
    CHECK(*rec.b > rec.optimum->x_star);
  }
}

TEST_CASE("sweep rows without a certificate carry no maximizer") {
  // combo with fractional 1/p starts above e^e where h already exceeds 1:
  // no admissible bracket, honest uncertified rows.
  const auto records = sweep("combo", "p", 0.5, 0.54, 0.02);
  REQUIRE(records.size() == 3);
  CHECK(records[0].certified);
  CHECK(records[0].optimum.has_value());
  CHECK_FALSE(records[1].certified);
  CHECK_FALSE(records[1].optimum.has_value());
  CHECK_FALSE(records[2].certified);
}

TEST_CASE("sweep validates its grid and parameter range") {
  CHECK_THROWS_AS(sweep("yunus", "p", 0.4, 0.6, 0.01), family_error);
  CHECK_THROWS_AS(sweep("yunus", "p", 0.6, 0.5, 0.01), domain_error);
  CHECK_THROWS_AS(sweep("yunus", "p", 0.5, 0.6, 0.0), domain_error);
  CHECK_THROWS_AS(sweep("yunus", "q", 0.5, 0.6, 0.05), family_error);
}

TEST_CASE("interval narrowing on the example family") {
  const auto res = narrow_interval("yunus", "p", 0.5, 1.0, 1e-3);
  CHECK(res.found_lo);
  CHECK(res.found_hi);
  CHECK(res.x_lo == doctest::Approx(3.4).epsilon(1e-12));
  CHECK(res.x_hi == doctest::Approx(5.2).epsilon(1e-12));
}

TEST_CASE("degenerate parameter range narrows around the single maximizer") {
  const auto res = narrow_interval("yunus", "p", 1.0, 1.0, 1e-3);
  CHECK(res.found_lo);
  CHECK(res.found_hi);
  CHECK(res.x_lo < 4.616179);
  CHECK(res.x_hi > 4.616179);
}

TEST_CASE("narrowing reports when no uniform sign exists") {
  // On a window strictly above every maximizer the stationarity function is
  // uniformly negative: there is no grid point with uniform positivity.
  const auto res = narrow_interval("yunus", "p", 0.5, 1.0, 0.01, 5.4, 7.0, 0.1);
  CHECK_FALSE(res.found_lo);
  CHECK(res.found_hi);
  CHECK(res.x_lo == doctest::Approx(5.4));

  CHECK_THROWS_AS(narrow_interval("yunus", "p", 0.5, 1.0, -1.0), domain_error);
}
