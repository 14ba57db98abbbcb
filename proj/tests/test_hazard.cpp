#include "oracles.hpp"

#include "telhaz/hazard.hpp"
#include "telhaz/hazard_config.hpp"

#include "approx.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace telhaz;

namespace {

struct Case {
  const char* label;
  HazardSpec spec;
  double c;
  double horizon;
};

std::vector<Case> builtin_cases()
{
  return {
      {"constant", constant_hazard(0.0125), 0.0004, 400.0},
      {"polynomial", polynomial_hazard(15.0, 0.001, 1.0), 1.0, 2.0},
      {"one_plus_exp", one_plus_exp_hazard(), 1.0, 5.0},
      {"bounded_excess", bounded_excess_hazard(), 1.0, 10.0},
      {"service_life", service_life_hazard(), 0.00025, 1500.0},
  };
}

}  // namespace

TEST_CASE("hazard_at: examples")
{
  CHECK(hazard_at(constant_hazard(0.0125), 50.0) == 0.0125);
  CHECK(hazard_at(polynomial_hazard(15.0, 0.001, 1.0), 1.0) == approx(1.001).epsilon(1e-15));
  CHECK(hazard_at(polynomial_hazard(15.0, 0.001, 1.0), 0.0) == approx(1.001).epsilon(1e-15));
  CHECK(hazard_at(service_life_hazard(), 650.0) == approx(0.002275).epsilon(1e-14));
  CHECK(hazard_at(service_life_hazard(), 800.0) == approx(-4.07143e-6 * 800 + 0.00492143).epsilon(1e-14));
  CHECK(hazard_at(service_life_hazard(), 1200.0) == approx(8e-6 * 1200 - 0.00715).epsilon(1e-14));
  CHECK(hazard_at(one_plus_exp_hazard(), 0.0) == 2.0);
  CHECK(hazard_at(one_plus_exp_hazard(), 1.0) == approx(1.0 + std::exp(1.0)));
  const double t = 0.7;
  CHECK(hazard_at(bounded_excess_hazard(), t) ==
        approx(1.0 + 3.0 * (1.0 - std::exp(-t)) / (std::exp(t) + std::exp(-t))));
  CHECK(hazard_at(bounded_excess_hazard(), 0.0) == 1.0);
}

TEST_CASE("spec validation")
{
  CHECK_THROWS_AS(constant_hazard(0.0), std::domain_error);
  CHECK_THROWS_AS(constant_hazard(-1.0), std::domain_error);
  CHECK_THROWS_AS(polynomial_hazard(-1.0, 0.001, 1.0), std::domain_error);
  CHECK_THROWS_AS(polynomial_hazard(15.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(piecewise_linear_hazard({}), std::domain_error);
  CHECK_THROWS_AS(piecewise_linear_hazard({{1.0, 0.0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(piecewise_linear_hazard({{0.0, 0.0, 1.0}, {0.0, 0.0, 2.0}}), std::domain_error);
  CHECK_THROWS_AS(piecewise_linear_hazard({{0.0, -1.0, 1.0}, {2.0, 0.0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(piecewise_linear_hazard({{0.0, -1.0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(HazardSpec(ConstantHazard{1.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(HazardSpec(CustomHazard{"empty", {}, {}, {}}), std::domain_error);
}

TEST_CASE("finite support: evaluation outside [0, l) is a domain error")
{
  const HazardSpec spec(ConstantHazard{2.0}, 3.0);
  CHECK(hazard_at(spec, 2.999) == 2.0);
  CHECK_THROWS_AS(hazard_at(spec, 3.0), std::domain_error);
  CHECK_THROWS_AS(cumulative_hazard(spec, 4.0), std::domain_error);
  CHECK_THROWS_AS(cdf(spec, -0.5), std::domain_error);
  CHECK_THROWS_AS(survival(constant_hazard(1.0), -1e-9), std::domain_error);
  CHECK_THROWS_AS(hazard_at(constant_hazard(1.0), std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("cumulative_hazard: closed forms")
{
  CHECK(cumulative_hazard(constant_hazard(0.0125), 80.0) == approx(1.0));
  const double a = 15.0;
  for (double t : {0.0, 0.2, 1.0, 1.7}) {
    const double expected = a / 4 * std::pow(t, 4) - 2 * a / 3 * std::pow(t, 3) + a / 2 * t * t + 1.001 * t;
    CHECK(cumulative_hazard(polynomial_hazard(a, 0.001, 1.0), t) == approx(expected).epsilon(1e-14));
  }
  // Piecewise segment quadratics: 3.5e-6 * 650^2 / 2 at the first breakpoint.
  CHECK(cumulative_hazard(service_life_hazard(), 650.0) == approx(3.5e-6 * 650 * 650 / 2).epsilon(1e-14));
}

TEST_CASE("cumulative_hazard agrees with quadrature of hazard_at within 1e-9")
{
  for (const auto& k : builtin_cases()) {
    CAPTURE(k.label);
    CHECK(cumulative_hazard(k.spec, 0.0) == 0.0);
    double prev = 0.0;
    for (int i = 1; i <= 25; ++i) {
      const double t = k.horizon * i / 25.0;
      const double ref = oracle::simpson([&](double s) { return hazard_at(k.spec, s); }, 0.0, t, 1e-13);
      const double got = cumulative_hazard(k.spec, t);
      CAPTURE(t);
      CHECK(std::abs(got - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
      CHECK(got >= prev);
      prev = got;
    }
  }
}

TEST_CASE("cdf and survival")
{
  for (const auto& k : builtin_cases()) {
    CAPTURE(k.label);
    CHECK(cdf(k.spec, 0.0) == 0.0);
    CHECK(survival(k.spec, 0.0) == 1.0);
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double t = k.horizon * i / 200.0;
      const double f = cdf(k.spec, t);
      const double s = survival(k.spec, t);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      CHECK(f >= prev);
      CHECK(std::abs(s + f - 1.0) < 4 * std::numeric_limits<double>::epsilon());
      prev = f;
    }
  }
  CHECK(cdf(constant_hazard(0.0125), 80.0) == approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(cdf(constant_hazard(0.0125), 80.0) == approx(0.63212).epsilon(1e-5));
}

TEST_CASE("survival is clamped to zero far in the tail")
{
  CHECK(survival(constant_hazard(1.0), 690.0) > 0.0);
  CHECK(survival(constant_hazard(1.0), 800.0) == 0.0);
  CHECK(cdf(constant_hazard(1.0), 800.0) == 1.0);
  CHECK(survival(one_plus_exp_hazard(), 10.0) == 0.0);
}

TEST_CASE("validate_dominance: examples")
{
  const auto constant = constant_hazard(0.0125);
  const auto grid = dominance_grid(constant, 400.0);
  CHECK(grid.size() >= 2048);
  CHECK(validate_dominance(constant, 0.0004, grid).holds);
  const auto fail = validate_dominance(constant, 0.02, grid);
  CHECK_FALSE(fail.holds);
  REQUIRE(fail.first_violation.has_value());
  CHECK(*fail.first_violation == grid.front());

  const auto poly = polynomial_hazard(15.0, 0.001, 1.0);
  CHECK(validate_dominance(poly, 1.0, dominance_grid(poly, 2.0)).holds);
  CHECK_FALSE(validate_dominance(poly, 1.001, dominance_grid(poly, 2.0)).holds);

  CHECK_THROWS_AS(validate_dominance(constant, 0.0004, std::vector<double>{}), std::domain_error);
}

TEST_CASE("dominance grid contains the critical points")
{
  const auto poly = polynomial_hazard(15.0, 0.001, 1.0);
  const auto grid = dominance_grid(poly, 2.0);
  for (double p : {0.0, 1.0 / 3.0, 1.0})
    CHECK(std::find(grid.begin(), grid.end(), p) != grid.end());

  // A narrow dip between uniform grid points is caught through a breakpoint.
  const auto dip = piecewise_linear_hazard({{0.0, 0.0, 1.0}, {0.31234, 0.0, 0.1}, {0.31235, 0.0, 1.0}});
  CHECK_FALSE(validate_dominance(dip, 0.5, dominance_grid(dip, 1.0)).holds);

  const auto svc = dominance_grid(service_life_hazard(), 1500.0);
  CHECK(std::find(svc.begin(), svc.end(), 650.0) != svc.end());
  CHECK(std::find(svc.begin(), svc.end(), 1000.0) != svc.end());

  const HazardSpec finite(ConstantHazard{1.0}, 2.0);
  const auto fg = dominance_grid(finite, 5.0);
  CHECK(fg.back() < 2.0);
}

TEST_CASE("stochastic order: F(t) > 1 - exp(-ct) for hazards dominating c")
{
  for (const auto& k : builtin_cases()) {
    CAPTURE(k.label);
    const auto grid = dominance_grid(k.spec, k.horizon);
    std::vector<double> positive;
    for (double t : grid)
      if (t > 0.0)
        positive.push_back(t);
    if (!validate_dominance(k.spec, k.c, positive).holds)
      continue;
    for (double t : positive) {
      // Compare through R(t) > ct so that the test is not lost to rounding.
      CHECK(cumulative_hazard(k.spec, t) > k.c * t);
      CHECK(cdf(k.spec, t) >= -std::expm1(-k.c * t));
    }
  }
}

TEST_CASE("hazard config parsing")
{
  const auto c = parse_hazard_config("kind=constant r0=0.0125");
  CHECK(hazard_at(c, 3.0) == 0.0125);

  const auto p = parse_hazard_config("kind=polynomial, alpha=15, beta=0.001, c_ref=1 # steep preset");
  CHECK(hazard_at(p, 1.0) == approx(1.001));

  const auto pw = parse_hazard_config(
      "# service life\nkind=piecewise\nsegments=0:3.5e-6:0|650:-4.07143e-6:0.00492143|1000:8e-6:-0.00715\n");
  for (double t : {0.0, 100.0, 650.0, 700.0, 1000.0, 1300.0})
    CHECK(hazard_at(pw, t) == hazard_at(service_life_hazard(), t));

  CHECK(hazard_at(parse_hazard_config("kind=preset name=one_plus_exp"), 0.0) == 2.0);
  CHECK(hazard_at(parse_hazard_config("kind=preset name=bounded_excess"), 0.0) == 1.0);
  CHECK(hazard_at(parse_hazard_config("kind=preset name=service_life"), 650.0) == approx(0.002275));

  const auto finite = parse_hazard_config("kind=constant r0=1 support_end=4");
  CHECK(finite.support_end() == 4.0);
  CHECK(std::isinf(parse_hazard_config("kind=constant r0=1 support_end=inf").support_end()));

  CHECK_THROWS_AS(parse_hazard_config(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=weird"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=constant"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=constant r0=abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=constant r0=-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=constant r0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=preset name=nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=piecewise segments=0:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hazard_config("kind=constant r0=1 bogus=2"), std::invalid_argument);
}
