#include "rmt/laguerre.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {
namespace {

constexpr double kLn2 = 0.6931471805599453;

double apply_exp2(double mantissa, long e2) {
  if (mantissa == 0.0) return 0.0;
  if (e2 < -1400) return 0.0;  // true value below double underflow
  if (e2 > 1200) throw std::overflow_error("weighted_laguerre: scale overflow");
  return std::ldexp(mantissa, static_cast<int>(e2));
}

void rescale(double& a, double& b, long& e2) {
  const double big = std::fmax(std::fabs(a), std::fabs(b));
  if (big == 0.0) return;
  if (big > 0x1p500) {
    a *= 0x1p-500;
    b *= 0x1p-500;
    e2 += 500;
  } else if (big < 0x1p-500) {
    a *= 0x1p500;
    b *= 0x1p500;
    e2 -= 500;
  }
}

}  // namespace

WeightedLaguerrePair weighted_laguerre_pair(std::int64_t k, std::int64_t alpha,
                                            double x) {
  if (!(x > 0.0)) throw std::domain_error("weighted_laguerre: x must be > 0");
  if (k < 0) throw std::domain_error("weighted_laguerre: k must be >= 0");
  if (alpha < 0) throw std::domain_error("weighted_laguerre: alpha must be >= 0");
  const double a = static_cast<double>(alpha);
  // phi_0 in log form; its magnitude can be far below double range while
  // phi_N is not, so the scale starts split from the outset.
  const double log_phi0 = 0.5 * (a * std::log(x) - x) - 0.5 * std::lgamma(a + 1.0);
  long e2 = static_cast<long>(std::floor(log_phi0 / kLn2));
  double cur = std::exp(log_phi0 - static_cast<double>(e2) * kLn2);
  double prev = 0.0;
  for (std::int64_t j = 0; j < k; ++j) {
    const double dj = static_cast<double>(j);
    const double next = ((2.0 * dj + a + 1.0 - x) * cur -
                         std::sqrt(dj * (dj + a)) * prev) /
                        std::sqrt((dj + 1.0) * (dj + 1.0 + a));
    prev = cur;
    cur = next;
    rescale(cur, prev, e2);
  }
  return {cur, prev, e2};
}

double weighted_laguerre_phi(std::int64_t k, std::int64_t alpha, double x) {
  const WeightedLaguerrePair p = weighted_laguerre_pair(k, alpha, x);
  return apply_exp2(p.phi_k, p.exp2);
}

PhiPsi phi_psi(const ShapeParams& sp, double x) {
  if (!(x > 0.0)) throw std::domain_error("phi_psi: x must be > 0");
  const WeightedLaguerrePair p = weighted_laguerre_pair(sp.N, sp.alpha, x);
  const double m = static_cast<double>(sp.N + sp.alpha);
  const double sqm = std::sqrt(m);
  const double sqN = std::sqrt(static_cast<double>(sp.N));
  const double sign = (sp.N % 2 == 0) ? 1.0 : -1.0;
  const double pref = sign * std::sqrt(sp.a_n / 2.0) / x;
  PhiPsi out;
  out.phi = pref * apply_exp2(sqm * p.phi_k - sqN * p.phi_km1, p.exp2);
  out.psi = pref * apply_exp2(sqN * p.phi_k - sqm * p.phi_km1, p.exp2);
  return out;
}

PhiPsi phi_psi_tau(const ShapeParams& sp, double s) {
  const double z = sp.mu + sp.sigma * s;
  PhiPsi out = phi_psi(sp, z);
  out.phi *= sp.sigma;
  out.psi *= sp.sigma;
  return out;
}

double big_f_n(const ShapeParams& sp, double z) {
  if (!(z > 0.0)) throw std::domain_error("big_f_n: z must be > 0");
  const WeightedLaguerrePair p = weighted_laguerre_pair(sp.N, sp.alpha, z);
  const double sign = (sp.N % 2 == 0) ? 1.0 : -1.0;
  return sign * apply_exp2(p.phi_k * std::sqrt(z / sp.sigma), p.exp2);
}

}  // namespace rmt
