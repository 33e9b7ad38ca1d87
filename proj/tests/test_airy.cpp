#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oracles.hpp"
#include "rmt/airy.hpp"
#include "rmt/quadrature.hpp"

using rmt::airy_ai;
using rmt::airy_ai_prime;

TEST_CASE("airy closed-form values at 0") {
  // Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
  const double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  const double aip0 = -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
  CHECK(airy_ai(0.0) == doctest::Approx(ai0).epsilon(1e-14));
  CHECK(airy_ai_prime(0.0) == doctest::Approx(aip0).epsilon(1e-14));
}

TEST_CASE("airy at 1 against the 50-term series oracle") {
  CHECK(std::fabs(airy_ai(1.0) - oracle::airy_series(1.0, 50)) < 1e-13);
}

TEST_CASE("airy against the integral representation") {
  for (double x : {-14.0, -10.0, -5.0, -2.0, 0.5, 2.0}) {
    CAPTURE(x);
    CHECK(std::fabs(airy_ai(x) - oracle::airy_integral(x)) < 1e-8);
  }
}

TEST_CASE("airy ODE residual by five-point differences") {
  // |Ai'' - x Ai| <= 1e-6 with h = 1e-3 across series and asymptotic regions
  const double h = 1e-3;
  for (double x = -10.0; x <= 5.0 + 1e-9; x += 0.25) {
    const double d2 = (-airy_ai(x - 2 * h) + 16 * airy_ai(x - h) -
                       30 * airy_ai(x) + 16 * airy_ai(x + h) -
                       airy_ai(x + 2 * h)) /
                      (12 * h * h);
    CAPTURE(x);
    CHECK(std::fabs(d2 - x * airy_ai(x)) < 1e-6);
  }
}

TEST_CASE("airy derivative consistent with finite differences") {
  const double h = 1e-5;
  for (double x : {-12.0, -7.0, -3.0, 0.0, 2.0, 7.0}) {
    const double fd = (airy_ai(x + h) - airy_ai(x - h)) / (2 * h);
    CAPTURE(x);
    CHECK(std::fabs(fd - airy_ai_prime(x)) < 1e-9);
  }
}

TEST_CASE("airy integral identities over the positive axis") {
  // int_0^inf Ai = 1/3 and int_0^inf Ai' = -Ai(0)
  const double i0 = rmt::integrate_gl([](double t) { return airy_ai(t); }, 0.0,
                                      30.0, 512);
  CHECK(std::fabs(i0 - 1.0 / 3.0) < 1e-11);
  const double i1 = rmt::integrate_gl(
      [](double t) { return airy_ai_prime(t); }, 0.0, 30.0, 512);
  CHECK(std::fabs(i1 + airy_ai(0.0)) < 1e-11);
}

TEST_CASE("airy branch switches are seamless") {
  for (double x : {-8.6, 6.2}) {
    const double below = airy_ai(std::nextafter(x, -100.0));
    const double above = airy_ai(std::nextafter(x, 100.0));
    CHECK(std::fabs(below - above) < 1e-11);
    const double pb = airy_ai_prime(std::nextafter(x, -100.0));
    const double pa = airy_ai_prime(std::nextafter(x, 100.0));
    CHECK(std::fabs(pb - pa) < 1e-10);
  }
}

TEST_CASE("airy underflows gracefully and rejects non-finite input") {
  CHECK(airy_ai(120.0) == 0.0);
  CHECK(airy_ai(1e300) == 0.0);
  CHECK(airy_ai(-1e7) == airy_ai(-1e7));  // finite, no NaN
  CHECK_THROWS_AS(airy_ai(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
  CHECK_THROWS_AS(airy_ai_prime(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}
