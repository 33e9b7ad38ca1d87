#include "rmt/painleve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmt/airy.hpp"
#include "rmt/errors.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {
namespace {

constexpr int kIntegratorVersion = 1;
constexpr double kGridStep = 0.01;
constexpr double kPolishFrom = -6.0;  // left of this a BVP polish takes over
constexpr double kBlowUp = 1e6;

// State: q, q', i1, J = int q^2, i2.  Swept backward in s.
using State = std::array<double, 5>;

State rhs(double s, const State& y) {
  return {y[1], s * y[0] + 2.0 * y[0] * y[0] * y[0], -y[0], -y[0] * y[0], -y[3]};
}

// Dormand-Prince 5(4) pair.
// Per-component error control is relative on q, q'; absolute control there
// would seed the unstable direction near s_max where |q| ~ 1e-7.
bool dopri_step(double& s, State& y, double& h, double rtol) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const State k1 = rhs(s, y);
  State t;
  for (int i = 0; i < 5; ++i) t[i] = y[i] + h * a21 * k1[i];
  const State k2 = rhs(s + c2 * h, t);
  for (int i = 0; i < 5; ++i) t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
  const State k3 = rhs(s + c3 * h, t);
  for (int i = 0; i < 5; ++i)
    t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  const State k4 = rhs(s + c4 * h, t);
  for (int i = 0; i < 5; ++i)
    t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  const State k5 = rhs(s + c5 * h, t);
  for (int i = 0; i < 5; ++i)
    t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                       a65 * k5[i]);
  const State k6 = rhs(s + h, t);
  State y5;
  for (int i = 0; i < 5; ++i)
    y5[i] = y[i] +
            h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
  const State k7 = rhs(s + h, y5);
  double err = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                          e6 * k6[i] + e7 * k7[i]);
    const double atol = (i < 2) ? 1e-290 : 1e-14;
    const double sc = atol + rtol * std::fmax(std::fabs(y[i]), std::fabs(y5[i]));
    err = std::fmax(err, std::fabs(e) / sc);
  }
  const bool accept = err <= 1.0;
  if (accept) {
    s += h;
    y = y5;
  }
  const double fac =
      std::clamp(0.9 * std::pow(err > 1e-12 ? err : 1e-12, -0.2), 0.2, 5.0);
  h *= fac;
  return accept;
}

// sqrt(-s/2)(1 + s^{-3}/8 - 73 s^{-6}/128), the left asymptote of q.
double left_asymptote(double s) {
  const double s3 = s * s * s;
  return std::sqrt(-0.5 * s) *
         (1.0 + 1.0 / (8.0 * s3) - 73.0 / (128.0 * s3 * s3));
}

// Backward sweep writing every grid node.  Returns the index of the last
// node reached (grid.size()-1 normally; earlier when |q| blows up, in which
// case the caller decides whether the polish can still take over).
Eigen::Index sweep(const Eigen::ArrayXd& grid, State y, double rtol,
                   Eigen::ArrayXd cols[5]) {
  double s = grid[0];
  double h = -1e-3;
  for (int c = 0; c < 5; ++c) cols[c][0] = y[c];
  for (Eigen::Index i = 1; i < grid.size(); ++i) {
    const double target = grid[i];
    while (s > target + 1e-13) {
      if (h < target - s) h = target - s;
      if (!dopri_step(s, y, h, rtol)) {
        if (std::fabs(h) < 1e-14)
          throw numeric_error("hastings_mcleod: step size underflow");
        continue;
      }
      if (std::fabs(y[0]) > kBlowUp) return i - 1;
    }
    for (int c = 0; c < 5; ++c) cols[c][i] = y[c];
  }
  return grid.size() - 1;
}

// Newton iteration on the Numerov discretization of q'' = s q + 2 q^3 over
// grid indices [lo, hi] with both endpoint values held fixed.  Numerov keeps
// the scheme truncation at O(h^4), so the stored values still satisfy a
// five-point residual test at the 1e-8 level.
void numerov_polish(const Eigen::ArrayXd& grid, Eigen::ArrayXd& q,
                    Eigen::Index lo, Eigen::Index hi) {
  const Eigen::Index m = hi - lo - 1;
  if (m < 1) return;
  const double h = grid[lo] - grid[lo + 1];
  const double h12 = h * h / 12.0;
  auto f = [&](Eigen::Index i) {
    return grid[i] * q[i] + 2.0 * q[i] * q[i] * q[i];
  };
  auto fp = [&](Eigen::Index i) { return grid[i] + 6.0 * q[i] * q[i]; };
  Eigen::ArrayXd a(m), b(m), c(m), r(m);
  for (int iter = 0; iter < 60; ++iter) {
    double maxr = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      const Eigen::Index i = lo + 1 + j;
      r[j] = -(q[i - 1] - 2.0 * q[i] + q[i + 1] -
               h12 * (f(i - 1) + 10.0 * f(i) + f(i + 1)));
      a[j] = 1.0 - h12 * fp(i - 1);
      b[j] = -2.0 - 10.0 * h12 * fp(i);
      c[j] = 1.0 - h12 * fp(i + 1);
      maxr = std::fmax(maxr, std::fabs(r[j]));
    }
    if (maxr < 1e-14) break;
    for (Eigen::Index j = 1; j < m; ++j) {
      const double w = a[j] / b[j - 1];
      b[j] -= w * c[j - 1];
      r[j] -= w * r[j - 1];
    }
    Eigen::ArrayXd dq(m);
    dq[m - 1] = r[m - 1] / b[m - 1];
    for (Eigen::Index j = m - 2; j >= 0; --j)
      dq[j] = (r[j] - c[j] * dq[j + 1]) / b[j];
    double damp = 1.0;
    const double biggest = dq.abs().maxCoeff();
    if (biggest > 0.5) damp = 0.5 / biggest;
    for (Eigen::Index j = 0; j < m; ++j) q[lo + 1 + j] += damp * dq[j];
  }
}

// Integral of a tabulated function over the step [grid[i+1], grid[i]]
// (grid descending) by the cubic 4-point rule, trapezoid at array edges.
double step_integral(const Eigen::ArrayXd& f, Eigen::Index i, double h) {
  if (i >= 1 && i + 2 < f.size())
    return h * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]) / 24.0;
  return 0.5 * h * (f[i] + f[i + 1]);
}

std::string cache_key(double s_min, double s_max, double tol) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "smin=%.6g smax=%.6g tol=%.6g version=%d",
                s_min, s_max, tol, kIntegratorVersion);
  return buf;
}

std::string cache_file_name(double s_min, double s_max, double tol) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "painleve_v%d_%.6g_%.6g_%.6g.csv",
                kIntegratorVersion, s_min, s_max, tol);
  return buf;
}

}  // namespace

Eigen::Index PainleveSolution::locate(double s) const {
  const double h = step();
  auto i = static_cast<Eigen::Index>(std::floor((grid[0] - s) / h));
  if (i < 0) i = 0;
  if (i > grid.size() - 2) i = grid.size() - 2;
  return i;
}

PainleveSolution solve_hastings_mcleod(double s_min, double s_max, double tol) {
  if (!(s_min < -8.0))
    throw std::domain_error("hastings_mcleod: s_min must be < -8");
  if (!(s_max > 6.0))
    throw std::domain_error("hastings_mcleod: s_max must be > +6");
  if (!(tol >= 1e-12 && tol <= 1e-6))
    throw std::domain_error("hastings_mcleod: tol must lie in [1e-12, 1e-6]");

  double top = s_max;
  for (int attempt = 0;; ++attempt) {
    const auto n_steps =
        static_cast<Eigen::Index>(std::ceil((top - s_min) / kGridStep));
    const double h = (top - s_min) / static_cast<double>(n_steps);
    Eigen::ArrayXd grid(n_steps + 1);
    for (Eigen::Index i = 0; i <= n_steps; ++i)
      grid[i] = top - h * static_cast<double>(i);
    grid[n_steps] = s_min;

    // Tail integrals of the Ai boundary data on [top, top+30].
    auto ai2 = [](double x) {
      const double a = airy_ai(x);
      return a * a;
    };
    State y0;
    y0[0] = airy_ai(top);
    y0[1] = airy_ai_prime(top);
    y0[2] = integrate_gl([](double x) { return airy_ai(x); }, top, top + 30.0, 256);
    y0[3] = integrate_gl(ai2, top, top + 30.0, 256);
    y0[4] = integrate_gl([&](double x) { return (x - top) * ai2(x); }, top,
                         top + 30.0, 256);

    Eigen::ArrayXd cols[5];
    for (auto& c : cols) c = Eigen::ArrayXd::Zero(grid.size());
    const Eigen::Index reached = sweep(grid, y0, tol, cols);
    const Eigen::Index tail_from = [&] {
      Eigen::Index i = 0;
      while (i < grid.size() && grid[i] > kPolishFrom + 1e-12) ++i;
      return i;
    }();
    if (reached < tail_from) {
      // blew up while still right of the asymptote region; restart higher
      if (attempt >= 3)
        throw numeric_error("hastings_mcleod: repeated blow-up of the backward sweep");
      top += 1.0;
      continue;
    }

    PainleveSolution sol;
    sol.grid = grid;
    sol.q = cols[0];
    sol.qprime = cols[1];
    sol.i1 = cols[2];
    sol.qsq_tail = cols[3];
    sol.i2 = cols[4];

    // One global Numerov pass with both ends pinned.  The sweep is accurate
    // to the right of kPolishFrom but its left tail carries amplified error,
    // so the guess switches to the asymptote there; the solve itself has no
    // interior junction and leaves no residual kink.
    const Eigen::Index lo = grid.size() - 1;
    for (Eigen::Index i = tail_from; i <= lo; ++i)
      sol.q[i] = left_asymptote(grid[i]);
    sol.q[0] = y0[0];  // = Ai(top), held fixed
    numerov_polish(grid, sol.q, 0, lo);

    // Tail integrals left of the asymptote boundary come from the polished q;
    // the sweep-accumulated values take over from there rightwards.
    if (tail_from >= 1 && tail_from < lo) {
      const Eigen::Index a = tail_from - 1;  // last sweep-backed node
      const Eigen::ArrayXd q2 = sol.q.square();
      for (Eigen::Index i = a; i < lo; ++i) {
        sol.i1[i + 1] = sol.i1[i] + step_integral(sol.q, i, h);
        sol.qsq_tail[i + 1] = sol.qsq_tail[i] + step_integral(q2, i, h);
      }
      for (Eigen::Index i = a; i < lo; ++i)
        sol.i2[i + 1] = sol.i2[i] + step_integral(sol.qsq_tail, i, h);
      for (Eigen::Index i = a + 1; i <= lo; ++i)
        sol.qprime[i] = (i < lo) ? (sol.q[i - 1] - sol.q[i + 1]) / (2.0 * h)
                                 : (sol.q[i - 1] - sol.q[i]) / h;
    }
    sol.s_min = s_min;
    sol.s_max = top;
    sol.tol = tol;
    sol.integrator_version = kIntegratorVersion;
    return sol;
  }
}

void save_painleve_table(const PainleveSolution& sol, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write painleve table: " + path);
  out << "# " << cache_key(sol.s_min, sol.s_max, sol.tol) << "\n";
  out << "s,q,qprime,i1,qsq_tail,i2\n";
  char line[256];
  for (Eigen::Index i = 0; i < sol.grid.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  sol.grid[i], sol.q[i], sol.qprime[i], sol.i1[i],
                  sol.qsq_tail[i], sol.i2[i]);
    out << line;
  }
  if (!out) throw io_error("short write of painleve table: " + path);
}

std::unique_ptr<PainleveSolution> load_painleve_table(const std::string& path,
                                                      double s_min,
                                                      double s_max,
                                                      double tol) {
  std::ifstream in(path);
  if (!in) return nullptr;
  std::string header;
  if (!std::getline(in, header)) return nullptr;
  if (header != "# " + cache_key(s_min, s_max, tol)) return nullptr;
  std::string cols;
  if (!std::getline(in, cols)) return nullptr;
  std::vector<std::array<double, 6>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 6> row;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg,%lg,%lg", &row[0], &row[1],
                    &row[2], &row[3], &row[4], &row[5]) != 6)
      return nullptr;
    rows.push_back(row);
  }
  if (rows.size() < 16) return nullptr;
  auto sol = std::make_unique<PainleveSolution>();
  const auto n = static_cast<Eigen::Index>(rows.size());
  sol->grid.resize(n);
  sol->q.resize(n);
  sol->qprime.resize(n);
  sol->i1.resize(n);
  sol->qsq_tail.resize(n);
  sol->i2.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    sol->grid[i] = rows[i][0];
    sol->q[i] = rows[i][1];
    sol->qprime[i] = rows[i][2];
    sol->i1[i] = rows[i][3];
    sol->qsq_tail[i] = rows[i][4];
    sol->i2[i] = rows[i][5];
  }
  sol->s_min = s_min;
  sol->s_max = sol->grid[0];
  sol->tol = tol;
  sol->integrator_version = kIntegratorVersion;
  return sol;
}

std::shared_ptr<const PainleveSolution> solve_hastings_mcleod_cached(
    double s_min, double s_max, double tol) {
  const char* dir = std::getenv("RMT_TW_CACHE");
  if (dir != nullptr && *dir != '\0') {
    const std::string path =
        std::string(dir) + "/" + cache_file_name(s_min, s_max, tol);
    if (auto loaded = load_painleve_table(path, s_min, s_max, tol))
      return std::shared_ptr<const PainleveSolution>(std::move(loaded));
    auto sol = std::make_shared<PainleveSolution>(
        solve_hastings_mcleod(s_min, s_max, tol));
    try {
      save_painleve_table(*sol, path);
    } catch (const io_error&) {
      // cache directory not writable; keep the in-memory solution
    }
    return sol;
  }
  return std::make_shared<PainleveSolution>(
      solve_hastings_mcleod(s_min, s_max, tol));
}

}  // namespace rmt
