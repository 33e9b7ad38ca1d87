#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>

namespace rmt {

// Hastings-McLeod solution of q'' = s q + 2 q^3 with q ~ Ai at +inf, tabulated
// on a uniform grid (descending in s) together with the tail integrals
//   i1(s) = int_s^inf q,  qsq_tail(s) = int_s^inf q^2,
//   i2(s) = int_s^inf (x - s) q^2(x) dx,
// which define the Tracy-Widom distribution functions.
struct PainleveSolution {
  Eigen::ArrayXd grid;      // descending s values, spacing <= 0.01
  Eigen::ArrayXd q;
  Eigen::ArrayXd qprime;
  Eigen::ArrayXd i1;
  Eigen::ArrayXd qsq_tail;  // int_s^inf q^2
  Eigen::ArrayXd i2;
  double s_min = 0, s_max = 0, tol = 0;
  int integrator_version = 0;

  double step() const { return grid[0] - grid[1]; }
  // Index of the grid node at or just right of s (grid is descending).
  Eigen::Index locate(double s) const;
};

// Integrates backward from s_max with (q, q') = (Ai, Ai') there, the tail
// integrals carried in the ODE state.  Below s = -6 the backward sweep is
// dominated by the e^{(2 sqrt2/3)|s|^{3/2}} error growth of the unstable
// direction, so that region is re-solved as a finite-difference boundary
// value problem anchored on the sqrt(-s/2) asymptote at s_min.
PainleveSolution solve_hastings_mcleod(double s_min = -10.0, double s_max = 8.0,
                                       double tol = 1e-10);

// Same, but consults the directory named by the RMT_TW_CACHE environment
// variable (if set) for a previously saved table with a matching key.
std::shared_ptr<const PainleveSolution> solve_hastings_mcleod_cached(
    double s_min = -10.0, double s_max = 8.0, double tol = 1e-10);

void save_painleve_table(const PainleveSolution& sol, const std::string& path);
// Returns nullptr when the file is missing, malformed, or keyed differently.
std::unique_ptr<PainleveSolution> load_painleve_table(const std::string& path,
                                                      double s_min, double s_max,
                                                      double tol);

}  // namespace rmt
