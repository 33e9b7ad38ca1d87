#include "rmt/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/airy.hpp"
#include "rmt/kernels.hpp"
#include "rmt/laguerre.hpp"

namespace rmt {
namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

double IdentityReport::max() const {
  return std::fmax(dev_lambda_beta_sq, std::fmax(dev_kappa_mu, dev_vieta));
}

IdentityReport check_identities(const ShapeParams& sp) {
  IdentityReport r;
  const double target = 2.0 * static_cast<double>(sp.N) + 1.0;
  r.dev_lambda_beta_sq =
      std::fabs(sp.lambda * sp.beta * sp.beta - target) / target;
  const double lhs = sp.kappa / sp.mu - (sp.lambda / sp.mu) * (sp.lambda / sp.mu);
  r.dev_kappa_mu = std::fabs(lhs - 0.25) / 0.25;
  r.dev_vieta = std::fabs(sp.x1 * sp.x2 - 4.0) / 4.0;
  return r;
}

double beta_asymptotic_ratio(const ShapeParams& sp) {
  const double ratio = static_cast<double>(sp.N) /
                       static_cast<double>(sp.N + sp.alpha);
  return sp.beta / (2.0 * std::sqrt(ratio));
}

double knn_ratio(std::int64_t n, std::int64_t N) {
  const ShapeParams sp = ShapeParams::complex_case(n, N);
  const double lam = sp.lambda;
  const double beta_sq = sp.beta * sp.beta;
  const double lb = lam * beta_sq;  // = 2N+1
  const double log_k =
      0.25 * std::log(2.0 * lam) +
      lam * (1.0 + beta_sq / 4.0) * (std::log(lam * (2.0 + beta_sq / 2.0)) - 1.0) +
      0.5 * std::log(2.0) + 0.25 * std::log(M_PI) +
      0.5 * std::lgamma(0.5 * (1.0 + lb)) + 0.25 * std::log(beta_sq) -
      std::log(lb) / 12.0 -
      0.5 * (std::lgamma(static_cast<double>(n) + 1.0) +
             std::lgamma(static_cast<double>(N) + 1.0) + std::log(sp.sigma));
  const double log_limit = (2.0 / 3.0) * std::log(2.0) +
                           0.25 * std::log(static_cast<double>(N) /
                                           static_cast<double>(n));
  return std::exp(log_k - log_limit);
}

double cphi_log_i(std::int64_t k, std::int64_t alpha) {
  if (k < 0 || k % 2 != 0)
    throw std::domain_error("cphi_log_i: k must be even and >= 0");
  if (alpha < 1) throw std::domain_error("cphi_log_i: alpha must be >= 1");
  const double a = static_cast<double>(alpha);
  const double dk = static_cast<double>(k);
  return 0.5 * a * std::log(2.0) + std::lgamma(0.5 * (a + dk)) -
         std::lgamma(0.5 * dk + 1.0);
}

CphiResult cphi_closed_form(std::int64_t N, std::int64_t alpha) {
  if (N < 2 || N % 2 != 0)
    throw std::domain_error("cphi_closed_form: N must be even and >= 2");
  if (alpha < 2) throw std::domain_error("cphi_closed_form: alpha must be >= 2");
  CphiResult r;
  r.N = N;
  r.alpha = alpha;
  r.log_i = cphi_log_i(N, alpha);
  r.i = std::exp(r.log_i);
  const double dn = static_cast<double>(N);
  const double m = static_cast<double>(N + alpha);
  const double log_v =
      0.5 * (std::lgamma(dn + 1.0) - std::lgamma(m)) + r.log_i;
  r.v = std::exp(log_v);
  r.sqrt2_cphi = std::exp(log_v + 0.25 * std::log(dn * m) - std::log(2.0));
  return r;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::decreasing: return "decreasing";
    case Verdict::bounded: return "bounded";
    case Verdict::converged: return "converged";
    case Verdict::failed: return "failed";
  }
  return "?";
}

Verdict trend_verdict(const std::vector<double>& values, double tolerance) {
  if (values.size() < 2) return Verdict::failed;
  int bad_steps = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] < values[i - 1])) ++bad_steps;
  bool ok = bad_steps == 0;
  if (bad_steps == 1) {
    // one non-monotone step tolerated when the last value is the minimum
    double mn = values[0];
    for (double v : values) mn = std::fmin(mn, v);
    ok = values.back() <= mn;
  }
  if (!ok) return Verdict::failed;
  return values.back() <= tolerance ? Verdict::converged : Verdict::decreasing;
}

Verdict bound_verdict(const std::vector<double>& values, double tolerance) {
  if (values.empty()) return Verdict::failed;
  for (double v : values)
    if (!(v <= tolerance) || !std::isfinite(v)) return Verdict::failed;
  return Verdict::bounded;
}

Schedule default_schedule() { return {{400, 20}, {1600, 40}, {6400, 80}}; }

std::vector<double> default_s_grid() {
  std::vector<double> g;
  for (double s = -5.0; s <= 20.0 + 1e-9; s += 1.0) g.push_back(s);
  return g;
}

namespace {

std::vector<double> bound_grid() {
  std::vector<double> g;
  for (double s = -5.0; s <= 30.0 + 1e-9; s += 0.5) g.push_back(s);
  return g;
}

ConvergenceReport make_report(const Schedule& sched, std::string metric,
                              std::vector<double> values, bool trend,
                              double tol) {
  ConvergenceReport r;
  r.schedule = sched;
  r.metric = std::move(metric);
  r.verdict = trend ? trend_verdict(values, tol) : bound_verdict(values, tol);
  r.values = std::move(values);
  r.tolerance = tol;
  return r;
}

}  // namespace

std::vector<ConvergenceReport> phi_tau_convergence(
    const Schedule& schedule, const std::vector<double>& s_grid) {
  std::vector<double> sup_phi, sup_psi, sup_fn, bnd_phi, bnd_psi, bnd_fn;
  const std::vector<double> bg = bound_grid();
  for (const auto& [n, N] : schedule) {
    const ShapeParams sp = ShapeParams::complex_case(n, N);
    double a = 0, b = 0, c = 0;
    for (double s : s_grid) {
      const double target = airy_ai(s) / kSqrt2;
      const PhiPsi pp = phi_psi_tau(sp, s);
      a = std::fmax(a, std::fabs(pp.phi - target));
      b = std::fmax(b, std::fabs(pp.psi - target));
      c = std::fmax(c, std::fabs(big_f_n(sp, sp.mu + sp.sigma * s) - airy_ai(s)));
    }
    sup_phi.push_back(a);
    sup_psi.push_back(b);
    sup_fn.push_back(c);
    double ba = 0, bb = 0, bc = 0;
    for (double s : bg) {
      const PhiPsi pp = phi_psi_tau(sp, s);
      ba = std::fmax(ba, std::exp(0.5 * s) * std::fabs(pp.phi));
      bb = std::fmax(bb, std::exp(0.5 * s) * std::fabs(pp.psi));
      bc = std::fmax(bc, std::exp(s) *
                             std::fabs(big_f_n(sp, sp.mu + sp.sigma * s)));
    }
    bnd_phi.push_back(ba);
    bnd_psi.push_back(bb);
    bnd_fn.push_back(bc);
  }
  std::vector<ConvergenceReport> out;
  out.push_back(make_report(schedule, "phi_tau_sup_error", sup_phi, true, 0.05));
  out.push_back(make_report(schedule, "psi_tau_sup_error", sup_psi, true, 0.2));
  out.push_back(make_report(schedule, "f_n_sup_error", sup_fn, true, 0.05));
  out.push_back(make_report(schedule, "phi_tau_exp_bound", bnd_phi, false, 10.0));
  out.push_back(make_report(schedule, "psi_tau_exp_bound", bnd_psi, false, 10.0));
  out.push_back(make_report(schedule, "f_n_exp_bound", bnd_fn, false, 10.0));
  return out;
}

std::vector<ConvergenceReport> phi_derivative_convergence(
    const Schedule& schedule, const std::vector<double>& s_grid) {
  constexpr double h = 1e-3;  // in the s variable, i.e. 1e-3 sigma in z
  std::vector<double> sup, bnd;
  const std::vector<double> bg = bound_grid();
  for (const auto& [n, N] : schedule) {
    const ShapeParams sp = ShapeParams::complex_case(n, N);
    auto deriv = [&](double s) {
      return (phi_psi_tau(sp, s + h).phi - phi_psi_tau(sp, s - h).phi) /
             (2.0 * h);
    };
    double a = 0;
    for (double s : s_grid)
      a = std::fmax(a, std::fabs(deriv(s) - airy_ai_prime(s) / kSqrt2));
    sup.push_back(a);
    double b = 0;
    for (double s : bg)
      if (s <= 20.0)
        b = std::fmax(b, std::exp(0.25 * s) * std::fabs(deriv(s)));
    bnd.push_back(b);
  }
  std::vector<ConvergenceReport> out;
  out.push_back(make_report(schedule, "s1_derivative_sup_error", sup, true, 0.1));
  out.push_back(make_report(schedule, "s1_derivative_exp_bound", bnd, false, 10.0));
  return out;
}

ConvergenceReport kernel_convergence(
    const Schedule& schedule,
    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<double> sup;
  for (const auto& [n, N] : schedule) {
    const ShapeParams sp = ShapeParams::complex_case(n, N);
    double a = 0;
    for (const auto& [x, y] : pairs) {
      const KernelEval ke = laguerre_kernel(sp, x, y, true);
      a = std::fmax(a, std::fabs(ke.value - airy_kernel(x, y)));
    }
    sup.push_back(a);
  }
  ConvergenceReport r;
  r.schedule = schedule;
  r.metric = "kernel_sup_error";
  r.verdict = trend_verdict(sup, 0.05);
  r.values = std::move(sup);
  r.tolerance = 0.05;
  return r;
}

std::vector<std::pair<double, double>> default_kernel_pairs() {
  return {{0.0, 0.0}, {0.0, 1.0}, {1.0, 2.0}, {-1.0, 0.5}, {2.0, 3.0}, {-2.0, -1.0}};
}

}  // namespace rmt
