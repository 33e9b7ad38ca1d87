#include <doctest.h>

#include <cmath>
#include <memory>

#include "rmt/errors.hpp"
#include "rmt/tracy_widom.hpp"

using rmt::cdf;
using rmt::fredholm_f2;
using rmt::quantile;
using rmt::TwCdf;
using rmt::TwLaw;

namespace {
std::shared_ptr<const rmt::PainleveSolution> shared_solution() {
  static auto sol = std::make_shared<const rmt::PainleveSolution>(
      rmt::solve_hastings_mcleod());
  return sol;
}
TwCdf tw1() { return rmt::make_tw_cdf(TwLaw::tw1, shared_solution()); }
TwCdf tw2() { return rmt::make_tw_cdf(TwLaw::tw2, shared_solution()); }
}  // namespace

TEST_CASE("TW1 cdf at tabulated reference points") {
  const TwCdf tw = tw1();
  CHECK(std::fabs(cdf(tw, -3.90) - 0.01) < 0.01);
  CHECK(std::fabs(cdf(tw, 0.98) - 0.95) < 0.005);
  CHECK(std::fabs(cdf(tw, 2.02) - 0.99) < 0.005);
}

TEST_CASE("quantiles and round trips") {
  const TwCdf tw = tw1();
  CHECK(std::fabs(quantile(tw, 0.95) - 0.98) < 0.02);
  CHECK(std::fabs(quantile(tw, 0.50) - (-1.27)) < 0.02);
  for (double p : {0.01, 0.5, 0.99}) {
    CAPTURE(p);
    CHECK(std::fabs(cdf(tw, quantile(tw, p)) - p) <= 1e-8);
  }
  const TwCdf t2 = tw2();
  for (double p : {0.05, 0.5, 0.95})
    CHECK(std::fabs(cdf(t2, quantile(t2, p)) - p) <= 1e-8);
}

TEST_CASE("quantile domain errors") {
  const TwCdf tw = tw1();
  CHECK_THROWS_AS(quantile(tw, 0.0), std::domain_error);
  CHECK_THROWS_AS(quantile(tw, 1.0), std::domain_error);
  CHECK_THROWS_AS(quantile(tw, -0.3), std::domain_error);
}

TEST_CASE("cdf clamps and limits") {
  const TwCdf tw = tw1();
  CHECK(cdf(tw, -50.0) == 0.0);
  CHECK(cdf(tw, 50.0) == 1.0);
  CHECK(cdf(tw, tw.s_min()) <= 1e-6);
  CHECK(1.0 - cdf(tw, tw.s_max() - 1e-9) <= 1e-6);
  const TwCdf t2 = tw2();
  CHECK(cdf(t2, t2.s_min()) <= 1e-6);
  CHECK(1.0 - cdf(t2, t2.s_max() - 1e-9) <= 1e-6);
}

TEST_CASE("both CDFs are nondecreasing on an off-node grid") {
  const TwCdf a = tw1(), b = tw2();
  double fa = 0.0, fb = 0.0;
  for (double s = -9.5; s <= 7.5; s += 0.0137) {
    const double ga = cdf(a, s), gb = cdf(b, s);
    CHECK(ga >= fa);
    CHECK(gb >= fb);
    fa = ga;
    fb = gb;
  }
}

TEST_CASE("stored integrals satisfy F1^2 = F2 exp(-i1)") {
  // the grid points -8(0.25)5 are exact table nodes, where the cdf layer
  // reproduces the stored integrals without interpolation
  const TwCdf a = tw1(), b = tw2();
  const auto& sol = *shared_solution();
  for (double s = -8.0; s <= 5.0 + 1e-9; s += 0.25) {
    const Eigen::Index i = sol.locate(s);
    const Eigen::Index node = (std::fabs(sol.grid[i] - s) <
                               std::fabs(sol.grid[i + 1] - s))
                                  ? i
                                  : i + 1;
    REQUIRE(std::fabs(sol.grid[node] - s) < 1e-9);
    const double f1 = cdf(a, sol.grid[node]);
    const double f2 = cdf(b, sol.grid[node]);
    if (f2 < 1e-300) continue;
    CHECK(std::fabs(f1 * f1 / (f2 * std::exp(-sol.i1[node])) - 1.0) < 1e-10);
  }
}

TEST_CASE("fredholm route: right tail, agreement, monotonicity") {
  CHECK(std::fabs(fredholm_f2(6.0, 64) - 1.0) <= 1e-6);
  const TwCdf t2 = tw2();
  CHECK(std::fabs(fredholm_f2(-1.27, 256) - cdf(t2, -1.27)) <= 1e-6);
  CHECK(fredholm_f2(-4.0, 128) < fredholm_f2(0.0, 128));
  CHECK(fredholm_f2(0.0, 128) < fredholm_f2(2.0, 128));
}

TEST_CASE("fredholm node validation") {
  CHECK_THROWS_AS(fredholm_f2(0.0, 100), std::domain_error);
  CHECK_THROWS_AS(fredholm_f2(0.0, 1024), std::domain_error);
  CHECK_THROWS_AS(fredholm_f2(0.0, 8), std::domain_error);
  CHECK_THROWS_AS(fredholm_f2(-11.0, 256), std::domain_error);
}
