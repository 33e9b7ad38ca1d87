#include "rmt/airy.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {
namespace {

// Ai(0) and -Ai'(0), i.e. 3^{-2/3}/Gamma(2/3) and 3^{-1/3}/Gamma(1/3).
constexpr long double kAi0 = 0.355028053887817239260063186004L;
constexpr long double kAiP0 = 0.258819403792806798405183560189L;

struct AiPair {
  double ai;
  double aip;
};

// Maclaurin series for the two ODE solutions f, g with w'' = x w,
// f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1.  Summed in long double: the series
// region reaches x = -8.6 where terms peak near 1e6, so extended precision
// is needed to keep the cancelled sum below 1e-12 absolute.
AiPair airy_series(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double f = 1.0L, fp = 0.0L;
  long double g = x, gp = 1.0L;
  long double tf = 1.0L;            // term of f
  long double tfp = 0.5L * x * x;   // term of f' (k=1)
  long double tg = x;               // term of g
  long double tgp = x3 / 3.0L;      // term of g' (k=1)
  fp += tfp;
  gp += tgp;
  for (int k = 1; k < 400; ++k) {
    const long double k3 = 3.0L * k;
    tf *= x3 / (k3 * (k3 - 1.0L));
    tg *= x3 / (k3 * (k3 + 1.0L));
    f += tf;
    g += tg;
    if (k >= 2) {
      tfp *= x3 * k / ((k - 1.0L) * k3 * (k3 - 1.0L));
      tgp *= x3 / ((k3 - 2.0L) * k3);
      fp += tfp;
      gp += tgp;
    }
    if (fabsl(tf) < 1e-25L * (fabsl(f) + 1.0L) &&
        fabsl(tg) < 1e-25L * (fabsl(g) + 1.0L))
      break;
  }
  AiPair out;
  out.ai = static_cast<double>(kAi0 * f - kAiP0 * g);
  out.aip = static_cast<double>(kAi0 * fp - kAiP0 * gp);
  return out;
}

// Asymptotic coefficients u_k (and v_k = u_k (6k+1)/(1-6k)), DLMF 9.7.
// Sums truncated at the smallest term.
AiPair airy_asymptotic_pos(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  if (zeta > 700.0) return {0.0, 0.0};  // exp underflow
  long double su = 0.0L, sv = 0.0L;
  long double u = 1.0L;
  long double zinv = 1.0L / static_cast<long double>(zeta);
  long double pw = 1.0L;
  long double prev = 1e30L;
  for (int k = 0; k < 40; ++k) {
    const long double tu = u * pw;
    if (fabsl(tu) > prev) break;
    prev = fabsl(tu);
    const long double sgn = (k % 2) ? -1.0L : 1.0L;
    su += sgn * tu;
    sv += sgn * tu * (6.0L * k + 1.0L) / (1.0L - 6.0L * k);
    u *= (6.0L * k + 1.0L) * (6.0L * k + 3.0L) * (6.0L * k + 5.0L) /
         (216.0L * (k + 1.0L) * (2.0L * k + 1.0L));
    pw *= zinv;
  }
  const double pref = std::exp(-zeta) / (2.0 * std::sqrt(M_PI));
  const double x4 = std::pow(x, 0.25);
  return {pref / x4 * static_cast<double>(su),
          -pref * x4 * static_cast<double>(sv)};
}

AiPair airy_asymptotic_neg(double x) {
  const double t = -x;
  const double zeta = 2.0 / 3.0 * t * std::sqrt(t);
  long double ceven = 0.0L, codd = 0.0L;   // sums multiplying cos/sin in Ai
  long double veven = 0.0L, vodd = 0.0L;
  long double u = 1.0L;
  const long double zinv = 1.0L / static_cast<long double>(zeta);
  long double pw = 1.0L;
  long double prev = 1e30L;
  for (int k = 0; k < 60; ++k) {
    const long double tu = u * pw;
    if (fabsl(tu) > prev) break;
    prev = fabsl(tu);
    const long double v = tu * (6.0L * k + 1.0L) / (1.0L - 6.0L * k);
    const long double sgn = ((k / 2) % 2) ? -1.0L : 1.0L;  // (-1)^floor(k/2)
    if (k % 2 == 0) {
      ceven += sgn * tu;
      veven += sgn * v;
    } else {
      codd += sgn * tu;
      vodd += sgn * v;
    }
    u *= (6.0L * k + 1.0L) * (6.0L * k + 3.0L) * (6.0L * k + 5.0L) /
         (216.0L * (k + 1.0L) * (2.0L * k + 1.0L));
    pw *= zinv;
  }
  const double ph = zeta - M_PI / 4.0;
  const double c = std::cos(ph), s = std::sin(ph);
  const double pref = 1.0 / std::sqrt(M_PI);
  const double t4 = std::pow(t, 0.25);
  const double ai = pref / t4 * (c * static_cast<double>(ceven) +
                                 s * static_cast<double>(codd));
  const double aip = pref * t4 * (s * static_cast<double>(veven) -
                                  c * static_cast<double>(vodd));
  return {ai, aip};
}

AiPair airy_both(double x) {
  if (!std::isfinite(x)) throw std::domain_error("airy: non-finite argument");
  if (x >= 6.2) return airy_asymptotic_pos(x);
  if (x <= -8.6) return airy_asymptotic_neg(x);
  return airy_series(x);
}

}  // namespace

double airy_ai(double x) { return airy_both(x).ai; }
double airy_ai_prime(double x) { return airy_both(x).aip; }

}  // namespace rmt
