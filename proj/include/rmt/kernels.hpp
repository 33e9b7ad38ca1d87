#pragma once

#include "rmt/shape.hpp"

namespace rmt {

// Airy kernel (Ai(x)Ai'(y) - Ai(y)Ai'(x))/(x - y).  Near the diagonal
// (|x-y| <= 1e-4) the divided difference is replaced by a short Taylor
// expansion around the midpoint; on the diagonal this is Ai'(x)^2 - x Ai(x)^2.
double airy_kernel(double x, double y);

// Same kernel via the integral form int_0^inf Ai(x+u)Ai(y+u) du; slower,
// used as an independent cross-check.
double airy_kernel_integral(double x, double y);

struct KernelEval {
  double x = 0;
  double y = 0;
  double value = 0;
  double quadrature_error_estimate = 0;
};

// Finite-N kernel S_N(x,y) = int_0^inf phi(x+z)psi(y+z) + psi(x+z)phi(y+z) dz
// by node-doubling Gauss-Legendre after z = -2 log u.  scaled=true evaluates
// the edge-rescaled S_tau(s,t) = sigma S_N(mu + sigma s, mu + sigma t); the
// unscaled value is recovered from the same integral in tau variables.
KernelEval laguerre_kernel(const ShapeParams& sp, double x, double y,
                           bool scaled);

}  // namespace rmt
