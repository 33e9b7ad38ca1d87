#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rmt/shape.hpp"

namespace rmt {

// Absolute relative deviations of the exact shape identities.
struct IdentityReport {
  double dev_lambda_beta_sq = 0;  // |lambda beta^2 - (2N+1)| / (2N+1)
  double dev_kappa_mu = 0;        // |kappa/mu - lambda^2/mu^2 - 1/4| / (1/4)
  double dev_vieta = 0;           // |x1 x2 - 4| / 4
  double max() const;
};

IdentityReport check_identities(const ShapeParams& sp);

// beta / (2 sqrt(N/(N+alpha))), which approaches 1 in the AB regime.
double beta_asymptotic_ratio(const ShapeParams& sp);

// Whittaker-prefactor constant assembled in log domain from its definition,
// divided by its limit 2^{2/3}(N/n)^{1/4}.  The leading deficit is
// (1+sqrt(N/n))^{-2/3}, so the ratio reaches 1 only slowly.
double knn_ratio(std::int64_t n, std::int64_t N);

// A7 closed form: I_{N,alpha} = 2^{alpha/2} Gamma((alpha+N)/2) / (N/2)! for
// even N, v = sqrt(N!/(N+alpha-1)!) I, and sqrt2_cphi = v sqrt(a_N)/2 with
// a_N = sqrt(N(N+alpha)).
struct CphiResult {
  std::int64_t N = 0;
  std::int64_t alpha = 0;
  double log_i = 0;  // log I (I itself overflows for large alpha)
  double i = 0;
  double v = 0;
  double sqrt2_cphi = 0;
};

CphiResult cphi_closed_form(std::int64_t N, std::int64_t alpha);
// log I_{k,alpha} for any even k >= 0 (the k = 0 coefficient is
// 2^{alpha/2} Gamma(alpha/2)).
double cphi_log_i(std::int64_t k, std::int64_t alpha);

enum class Verdict { decreasing, bounded, converged, failed };
const char* to_string(Verdict v);

struct ConvergenceReport {
  std::vector<std::pair<std::int64_t, std::int64_t>> schedule;  // (n, N)
  std::string metric;
  std::vector<double> values;  // one per schedule point
  Verdict verdict = Verdict::failed;
  double tolerance = 0;
  bool passed() const { return verdict != Verdict::failed; }
};

// Verdict rules, pure functions of the stored values:
//  - trend: strictly decreasing (one non-monotone step tolerated when the
//    final value is the minimum) => decreasing, and converged when the final
//    value also sits below the tolerance; anything else fails.
//  - bound: every value <= tolerance => bounded, else failed.
Verdict trend_verdict(const std::vector<double>& values, double tolerance);
Verdict bound_verdict(const std::vector<double>& values, double tolerance);

using Schedule = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Default AB-regime schedule {(400,20), (1600,40), (6400,80)} and s grid.
Schedule default_schedule();
std::vector<double> default_s_grid();

// sup_s |phi_tau - Ai/sqrt2| and |psi_tau - Ai/sqrt2| per schedule point,
// the F_N analogue sup_s |F_N(mu + sigma s) - Ai(s)|, and the exponential
// bound metrics sup e^{s/2}|phi_tau|, sup e^{s/2}|psi_tau|, sup e^s|F_N|
// (bounds taken over [-5, 30]).
std::vector<ConvergenceReport> phi_tau_convergence(
    const Schedule& schedule, const std::vector<double>& s_grid);

// sup_s |sigma^2 phi'(mu + sigma s) - Ai'(s)/sqrt2| by central differences
// with step 1e-3 in s, plus the e^{s/4} bound metric.
std::vector<ConvergenceReport> phi_derivative_convergence(
    const Schedule& schedule, const std::vector<double>& s_grid);

// sup over pairs of |S_tau(x, y) - Airy kernel(x, y)| per schedule point.
ConvergenceReport kernel_convergence(
    const Schedule& schedule, const std::vector<std::pair<double, double>>& pairs);
std::vector<std::pair<double, double>> default_kernel_pairs();

}  // namespace rmt
