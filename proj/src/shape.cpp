#include "rmt/shape.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {
namespace {

ShapeParams build(std::int64_t n, std::int64_t N, std::int64_t alpha,
                  ShapeParams::Convention conv) {
  if (N < 1) throw std::domain_error("ShapeParams: N must be >= 1");
  if (alpha < 1) throw std::domain_error("ShapeParams: alpha must be >= 1 (need n > N)");
  ShapeParams sp;
  sp.n = n;
  sp.N = N;
  sp.alpha = alpha;
  sp.convention = conv;
  sp.lambda = 0.5 * static_cast<double>(alpha);
  sp.kappa = static_cast<double>(N) + 0.5 * static_cast<double>(alpha + 1);
  sp.l = sp.kappa / sp.lambda;
  // kappa - lambda = N + 1/2 exactly, so beta^2 = (2N+1)/lambda keeps
  // lambda*beta^2 == 2N+1 to a couple of ulps even when l is close to 1.
  const double beta_sq = (2.0 * static_cast<double>(N) + 1.0) / sp.lambda;
  sp.beta = std::sqrt(beta_sq);
  const double disc = std::sqrt((sp.l - 1.0) * (sp.l + 1.0));
  sp.x2 = 2.0 * sp.l + 2.0 * disc;
  sp.x1 = 4.0 / sp.x2;  // stable small root of x^2 - 4lx + 4
  const double m = static_cast<double>(N + alpha);
  sp.a_n = std::sqrt(static_cast<double>(N) * m);
  const double mp = m + 0.5;
  const double Np = static_cast<double>(N) + 0.5;
  const double r = std::sqrt(mp) + std::sqrt(Np);
  sp.mu = r * r;
  sp.sigma = r * std::cbrt(1.0 / std::sqrt(Np) + 1.0 / std::sqrt(mp));
  return sp;
}

}  // namespace

ShapeParams ShapeParams::complex_case(std::int64_t n, std::int64_t N) {
  return build(n, N, n - N, Convention::complex_entries);
}

ShapeParams ShapeParams::real_case(std::int64_t n, std::int64_t N) {
  return build(n, N, n - 1 - N, Convention::real_entries);
}

}  // namespace rmt
