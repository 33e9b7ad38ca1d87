#include "rmt/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/airy.hpp"
#include "rmt/errors.hpp"
#include "rmt/laguerre.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {
namespace {
constexpr double kDiagSwitch = 1e-4;
}

double airy_kernel(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw std::domain_error("airy_kernel: non-finite argument");
  if (std::fabs(x - y) > kDiagSwitch) {
    return (airy_ai(x) * airy_ai_prime(y) - airy_ai(y) * airy_ai_prime(x)) /
           (x - y);
  }
  // Taylor expansion of the divided difference at the midpoint; the d^2 term
  // keeps the error O(d^4) ~ 1e-16 inside the switch window.
  const double m = 0.5 * (x + y);
  const double d = 0.5 * (y - x);
  const double a = airy_ai(m), ap = airy_ai_prime(m);
  return (ap * ap - m * a * a) +
         d * d * (a * ap / 3.0 + (2.0 / 3.0) * m * (ap * ap - m * a * a));
}

double airy_kernel_integral(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw std::domain_error("airy_kernel_integral: non-finite argument");
  const double lo = std::fmin(x, y);
  const double cut = std::fmax(12.0 - lo, 8.0);  // Ai(lo+cut) < 1e-10
  auto f = [&](double u) { return airy_ai(x + u) * airy_ai(y + u); };
  auto [val, est] = integrate_gl_adaptive(f, 0.0, cut, 1e-12, 64, 4096);
  (void)est;
  return val;
}

KernelEval laguerre_kernel(const ShapeParams& sp, double x, double y,
                           bool scaled) {
  double sx = x, sy = y;
  if (!scaled) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::domain_error("laguerre_kernel: unscaled arguments must be > 0");
    sx = (x - sp.mu) / sp.sigma;
    sy = (y - sp.mu) / sp.sigma;
  }
  if (!(sp.mu + sp.sigma * std::fmin(sx, sy) > 0.0))
    throw std::domain_error("laguerre_kernel: argument below the origin");

  // tau-variable integrand; decays like e^{-z} by the edge bound, so the
  // map z = -2 log u removes the endpoint tail.
  auto f = [&](double u) {
    const double z = -2.0 * std::log(u);
    const PhiPsi a = phi_psi_tau(sp, sx + z);
    const PhiPsi b = phi_psi_tau(sp, sy + z);
    return (a.phi * b.psi + a.psi * b.phi) * 2.0 / u;
  };
  auto [val, est] = integrate_gl_adaptive(f, 0.0, 1.0, 1e-9, 32, 16384);
  if (!std::isfinite(val) || est > 1e-4)
    throw numeric_error("laguerre_kernel: quadrature did not converge, estimate " +
                        std::to_string(est));
  KernelEval out;
  out.x = x;
  out.y = y;
  out.value = scaled ? val : val / sp.sigma;
  out.quadrature_error_estimate = scaled ? est : est / sp.sigma;
  return out;
}

}  // namespace rmt
