#include "rmt/tracy_widom.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rmt/errors.hpp"
#include "rmt/kernels.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {
namespace {

// Cubic Hermite interpolation of the tail integrals; their derivatives are
// known exactly (i1' = -q, i2' = -qsq_tail), so no spline fit is needed and
// the interpolant cannot overshoot at h = 0.01.
double hermite(double sl, double sr, double fl, double fr, double dl,
               double dr, double s) {
  const double h = sr - sl;
  const double t = (s - sl) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * fl + (t3 - 2 * t2 + t) * h * dl +
         (-2 * t3 + 3 * t2) * fr + (t3 - t2) * h * dr;
}

struct TailIntegrals {
  double i1, i2, q, j;
};

TailIntegrals interp(const PainleveSolution& sol, double s) {
  const Eigen::Index i = sol.locate(s);
  const double sl = sol.grid[i + 1], sr = sol.grid[i];
  TailIntegrals out;
  out.i1 = hermite(sl, sr, sol.i1[i + 1], sol.i1[i], -sol.q[i + 1], -sol.q[i], s);
  out.i2 = hermite(sl, sr, sol.i2[i + 1], sol.i2[i], -sol.qsq_tail[i + 1],
                   -sol.qsq_tail[i], s);
  const double t = (s - sl) / (sr - sl);
  out.q = sol.q[i + 1] + t * (sol.q[i] - sol.q[i + 1]);
  out.j = sol.qsq_tail[i + 1] + t * (sol.qsq_tail[i] - sol.qsq_tail[i + 1]);
  return out;
}

}  // namespace

TwCdf make_tw_cdf(TwLaw which,
                  std::shared_ptr<const PainleveSolution> solution) {
  if (!solution) throw std::domain_error("make_tw_cdf: null solution");
  return TwCdf{which, std::move(solution)};
}

TwCdf make_tw_cdf(TwLaw which) {
  return TwCdf{which, solve_hastings_mcleod_cached()};
}

double cdf(const TwCdf& tw, double s) {
  if (std::isnan(s)) throw std::domain_error("cdf: NaN argument");
  const PainleveSolution& sol = *tw.solution;
  if (s <= sol.s_min) return 0.0;
  if (s >= sol.s_max) return 1.0;
  const TailIntegrals t = interp(sol, s);
  return tw.which == TwLaw::tw2 ? std::exp(-t.i2)
                                : std::exp(-0.5 * (t.i1 + t.i2));
}

double quantile(const TwCdf& tw, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("quantile: p must lie in (0, 1)");
  const PainleveSolution& sol = *tw.solution;
  double lo = sol.s_min, hi = sol.s_max;
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cdf(tw, mid) < p ? lo : hi) = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double f = cdf(tw, s) - p;
    if (std::fabs(f) <= 1e-10) break;
    const TailIntegrals t = interp(sol, s);
    const double dens = tw.which == TwLaw::tw2
                            ? (f + p) * t.j
                            : (f + p) * 0.5 * (t.q + t.j);
    if (!(dens > 0.0)) break;
    s -= f / dens;
    s = std::clamp(s, sol.s_min, sol.s_max);
  }
  return s;
}

double fredholm_f2(double s, int nodes) {
  if (!(s >= -10.0 && s <= 6.0))
    throw std::domain_error("fredholm_f2: s must lie in [-10, 6]");
  if (nodes < 16 || nodes > 512 || (nodes & (nodes - 1)) != 0)
    throw std::domain_error("fredholm_f2: nodes must be a power of two in [16, 512]");

  auto det_at = [&](int m) {
    // truncate where Ai(s+T)^2 < 1e-18
    const double T = std::fmax(10.0 - s, 4.0);
    const QuadratureRule& r = gauss_legendre(m);
    Eigen::VectorXd u(m), sw(m);
    for (int i = 0; i < m; ++i) {
      u[i] = s + T * 0.5 * (r.nodes[i] + 1.0);
      sw[i] = std::sqrt(r.weights[i] * T * 0.5);
    }
    Eigen::MatrixXd K(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        K(i, j) = airy_kernel(u[i], u[j]) * sw[i] * sw[j];
        K(j, i) = K(i, j);
      }
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(m, m) - K;
    return Eigen::PartialPivLU<Eigen::MatrixXd>(A).determinant();
  };

  const double val = det_at(nodes);
  if (nodes >= 32) {
    const double coarse = det_at(nodes / 2);
    if (!(std::fabs(val - coarse) <= 1e-6))
      throw numeric_error("fredholm_f2: no convergence under node doubling: " +
                          std::to_string(coarse) + " vs " + std::to_string(val));
  }
  return val;
}

}  // namespace rmt
