#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rmt/shape.hpp"

using rmt::ShapeParams;

TEST_CASE("lambda beta^2 equals 2N+1 within 4 ulps") {
  for (auto [n, N] : {std::pair<std::int64_t, std::int64_t>{100, 10},
                      {1000, 999},
                      {1000000, 2},
                      {1000000, 999998},
                      {400, 20}}) {
    const ShapeParams sp = ShapeParams::complex_case(n, N);
    const double target = 2.0 * static_cast<double>(N) + 1.0;
    const double got = sp.lambda * sp.beta * sp.beta;
    CAPTURE(n);
    CAPTURE(N);
    CHECK(std::fabs(got - target) <= 4.0 * std::ldexp(target, -52));
  }
}

TEST_CASE("turning points satisfy Vieta") {
  for (auto [n, N] : {std::pair<std::int64_t, std::int64_t>{100, 10},
                      {1000000, 2},
                      {1000000, 999998},
                      {50, 5}}) {
    const ShapeParams sp = ShapeParams::complex_case(n, N);
    CHECK(std::fabs(sp.x1 * sp.x2 - 4.0) < 4e-10);
    CHECK(std::fabs(sp.x1 + sp.x2 - 4.0 * sp.l) < 4e-10 * sp.l);
  }
}

TEST_CASE("conventions differ by one in alpha") {
  const ShapeParams c = ShapeParams::complex_case(20, 5);
  const ShapeParams r = ShapeParams::real_case(20, 5);
  CHECK(c.alpha == 15);
  CHECK(r.alpha == 14);
}

TEST_CASE("section-4 scalings from half-integer shifts") {
  const ShapeParams sp = ShapeParams::complex_case(10000, 100);
  const double r = std::sqrt(10000.5) + std::sqrt(100.5);
  CHECK(sp.mu == doctest::Approx(r * r).epsilon(1e-15));
  CHECK(sp.sigma ==
        doctest::Approx(r * std::cbrt(1 / std::sqrt(100.5) + 1 / std::sqrt(10000.5)))
            .epsilon(1e-15));
  CHECK(sp.a_n == doctest::Approx(std::sqrt(100.0 * 10000.0)).epsilon(1e-15));
}

TEST_CASE("alpha >= 1 is required") {
  CHECK_THROWS_AS(ShapeParams::complex_case(10, 10), std::domain_error);
  CHECK_THROWS_AS(ShapeParams::real_case(11, 10), std::domain_error);
  CHECK_NOTHROW(ShapeParams::real_case(12, 10));
}
