#pragma once

#include <Eigen/Dense>

namespace rmt {

struct QuadratureRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
};

// Gauss-Legendre rule on [-1, 1].  Rules are cached per m; thread-safe.
const QuadratureRule& gauss_legendre(int m);

// Generalized Gauss-Laguerre rule for the weight x^alpha e^{-x} on [0, inf),
// computed by Golub-Welsch on the Jacobi matrix.  Intended for small m.
QuadratureRule gauss_laguerre(int m, double alpha);

// Integrate f over [a, b] with a fixed Gauss-Legendre rule.
template <typename F>
double integrate_gl(F&& f, double a, double b, int m) {
  const QuadratureRule& r = gauss_legendre(m);
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  double acc = 0.0;
  for (int i = 0; i < r.nodes.size(); ++i)
    acc += r.weights[i] * f(c + h * r.nodes[i]);
  return acc * h;
}

// Node-doubling Gauss-Legendre until |I_2m - I_m| <= abs_tol or m > m_max.
// Returns the last value and the achieved estimate.
template <typename F>
std::pair<double, double> integrate_gl_adaptive(F&& f, double a, double b,
                                                double abs_tol, int m_start,
                                                int m_max) {
  double prev = integrate_gl(f, a, b, m_start);
  double est = std::numeric_limits<double>::infinity();
  for (int m = 2 * m_start; m <= m_max; m *= 2) {
    const double cur = integrate_gl(f, a, b, m);
    est = std::abs(cur - prev);
    prev = cur;
    if (est <= abs_tol) break;
  }
  return {prev, est};
}

}  // namespace rmt
