#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rmt/rng.hpp"

using rmt::GaussianStream;

TEST_CASE("philox is a pure function of its coordinates") {
  const auto a = rmt::philox4x32(41, 7, 1234);
  const auto b = rmt::philox4x32(41, 7, 1234);
  CHECK(a == b);
  CHECK(rmt::philox4x32(41, 7, 1235) != a);
  CHECK(rmt::philox4x32(41, 8, 1234) != a);
  CHECK(rmt::philox4x32(42, 7, 1234) != a);
}

TEST_CASE("streams replay identically") {
  GaussianStream a(99, 3), b(99, 3);
  for (int i = 0; i < 100; ++i) CHECK(a.next_gaussian() == b.next_gaussian());
  GaussianStream c(99, 4);
  bool all_same = true;
  GaussianStream a2(99, 3);
  for (int i = 0; i < 20; ++i)
    all_same = all_same && (a2.next_gaussian() == c.next_gaussian());
  CHECK_FALSE(all_same);
}

TEST_CASE("uniforms live strictly inside (0,1)") {
  GaussianStream g(5, 0);
  for (int i = 0; i < 20000; ++i) {
    const double u = g.next_uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gaussian moments") {
  GaussianStream g(12, 0);
  const int n = 200000;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < n; ++i) {
    const double z = g.next_gaussian();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::fabs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::fabs(var - 1.0) < 6.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("gamma sampler moments incl. shape < 1") {
  GaussianStream g(13, 0);
  const int n = 200000;
  for (double shape : {0.5, 2.5, 30.0}) {
    double sum = 0;
    GaussianStream gs(13, static_cast<std::uint64_t>(shape * 10));
    for (int i = 0; i < n; ++i) sum += gs.next_gamma(shape);
    const double mean = sum / n;
    // Gamma(shape) has mean = shape, var = shape
    CAPTURE(shape);
    CHECK(std::fabs(mean - shape) <
          5.0 * std::sqrt(shape / static_cast<double>(n)));
  }
  CHECK_THROWS_AS(g.next_gamma(0.0), std::domain_error);
}
