#pragma once

#include <cstdint>

namespace rmt {

// The (n, N) geometry of a Laguerre ensemble and every derived spectral
// parameter.  alpha follows the field convention: n - N for complex data,
// n - 1 - N for real data.  Formulas that refer to the column count always
// use N + alpha (equal to n in the complex convention).
struct ShapeParams {
  enum class Convention { complex_entries, real_entries };

  std::int64_t n = 0;      // row count of X
  std::int64_t N = 0;      // column count (the smaller dimension)
  std::int64_t alpha = 0;  // n - N or n - 1 - N, by convention
  Convention convention = Convention::complex_entries;

  double kappa = 0;   // N + (alpha+1)/2
  double lambda = 0;  // alpha/2
  double l = 0;       // kappa/lambda
  double beta = 0;    // sqrt(2(l-1)) == sqrt((2N+1)/lambda)
  double x1 = 0, x2 = 0;  // turning points 2l -+ 2 sqrt(l^2-1)
  double a_n = 0;     // sqrt(N (N+alpha))
  double mu = 0;      // ((N+alpha+1/2)^{1/2} + (N+1/2)^{1/2})^2
  double sigma = 0;   // matching third-root scale

  static ShapeParams complex_case(std::int64_t n, std::int64_t N);
  static ShapeParams real_case(std::int64_t n, std::int64_t N);
};

}  // namespace rmt
