// Test-only oracles, independent of the library evaluation paths they check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "rmt/airy.hpp"
#include "rmt/quadrature.hpp"

namespace oracle {

// Ai by its Maclaurin series, summed in long double with a fixed term count.
inline double airy_series(double xd, int terms = 50) {
  const long double c1 = 0.355028053887817239260063186004L;
  const long double c2 = 0.258819403792806798405183560189L;
  const long double x = xd;
  const long double x3 = x * x * x;
  long double f = 1.0L, g = x, tf = 1.0L, tg = x;
  for (int k = 1; k <= terms; ++k) {
    tf *= x3 / ((3.0L * k) * (3.0L * k - 1.0L));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    f += tf;
    g += tg;
  }
  return static_cast<double>(c1 * f - c2 * g);
}

// Ai by the oscillatory integral (1/pi) int_0^inf cos(t^3/3 + x t) dt,
// evaluated on the rotated ray t = e^{i pi/6} u where the integrand decays
// like e^{-u^3/3}.  Usable for x in [-15, 2].
inline double airy_integral(double x) {
  using cplx = std::complex<double>;
  const cplx rot = std::polar(1.0, M_PI / 6.0);
  const cplx dir = std::polar(1.0, 2.0 * M_PI / 3.0);
  auto f = [&](double u) {
    const cplx e = std::exp(cplx(-u * u * u / 3.0, 0.0) + x * u * dir);
    return (rot * e).real();
  };
  const double val = rmt::integrate_gl(f, 0.0, 8.0, 1024);
  return val / M_PI;
}

// Hastings-McLeod q by Chebyshev collocation on [-8, 8] with Newton
// iteration; boundary data are Ai on the right and the sqrt(-s/2) asymptote
// on the left.  Returns q at the node closest to s = 0.
inline double hastings_mcleod_q0_collocation(int n_cheb = 120) {
  const int n = n_cheb;
  const double L = 8.0;
  Eigen::VectorXd t(n + 1), s(n + 1), c(n + 1);
  for (int k = 0; k <= n; ++k) {
    t[k] = std::cos(M_PI * k / n);
    s[k] = L * t[k];
    c[k] = ((k == 0 || k == n) ? 2.0 : 1.0) * ((k % 2) ? -1.0 : 1.0);
  }
  Eigen::MatrixXd D(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) D(i, j) = c[i] / c[j] / (t[i] - t[j]);
  for (int i = 0; i <= n; ++i) {
    double row = 0;
    for (int j = 0; j <= n; ++j)
      if (i != j) row += D(i, j);
    D(i, i) = -row;
  }
  D /= L;
  const Eigen::MatrixXd D2 = D * D;

  Eigen::VectorXd q(n + 1);
  for (int k = 0; k <= n; ++k)
    q[k] = std::sqrt((std::hypot(s[k], 1.4) - s[k]) / 4.0);
  const double bc_right = rmt::airy_ai(L);
  const double sl = -L;
  const double s3 = sl * sl * sl;
  const double bc_left = std::sqrt(-0.5 * sl) *
                         (1.0 + 1.0 / (8.0 * s3) - 73.0 / (128.0 * s3 * s3));

  auto residual = [&](const Eigen::VectorXd& qq) {
    Eigen::VectorXd F = D2 * qq;
    for (int k = 0; k <= n; ++k)
      F[k] -= s[k] * qq[k] + 2.0 * qq[k] * qq[k] * qq[k];
    F[0] = qq[0] - bc_right;
    F[n] = qq[n] - bc_left;
    return F;
  };
  for (int it = 0; it < 60; ++it) {
    const Eigen::VectorXd F = residual(q);
    Eigen::MatrixXd J = D2;
    for (int k = 0; k <= n; ++k) J(k, k) -= s[k] + 6.0 * q[k] * q[k];
    J.row(0).setZero();
    J(0, 0) = 1.0;
    J.row(n).setZero();
    J(n, n) = 1.0;
    const Eigen::VectorXd dq = J.partialPivLu().solve(-F);
    double damp = 1.0;
    const double base = F.norm();
    for (int half = 0; half < 30; ++half) {
      if (residual(q + damp * dq).norm() < base) break;
      damp *= 0.5;
    }
    q += damp * dq;
    if (dq.lpNorm<Eigen::Infinity>() < 1e-13) break;
  }
  int mid = 0;
  for (int k = 1; k <= n; ++k)
    if (std::fabs(s[k]) < std::fabs(s[mid])) mid = k;
  return q[mid];
}

// Weighted Laguerre function straight from its definition, in long double.
inline double weighted_laguerre_direct(int k, int alpha, double xd) {
  const long double x = xd;
  const long double a = alpha;
  long double lp = 1.0L, l = 1.0L + a - x;  // L_0, L_1
  if (k == 0) l = 1.0L;
  for (int j = 1; j < k; ++j) {
    const long double next =
        ((2.0L * j + a + 1.0L - x) * l - (j + a) * lp) / (j + 1.0L);
    lp = l;
    l = next;
  }
  const long double logw = 0.5L * (a * logl(x) - x) +
                           0.5L * (lgammal(k + 1.0L) - lgammal(k + a + 1.0L));
  return static_cast<double>(l * expl(logw));
}

}  // namespace oracle
