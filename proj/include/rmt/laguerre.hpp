#pragma once

#include <cstdint>

#include "rmt/shape.hpp"

namespace rmt {

// Weighted Laguerre function phi_k(x) = sqrt(k!/(k+alpha)!) x^{alpha/2}
// e^{-x/2} L_k^alpha(x).  Evaluated by a three-term recurrence on the
// weighted functions themselves with a running binary exponent, so nothing
// overflows for alpha up to ~1e5 and x up to 4n.
double weighted_laguerre_phi(std::int64_t k, std::int64_t alpha, double x);

// Consecutive pair (phi_k, phi_{k-1}) sharing one scale factor 2^exp2.
struct WeightedLaguerrePair {
  double phi_k = 0;
  double phi_km1 = 0;
  long exp2 = 0;
};
WeightedLaguerrePair weighted_laguerre_pair(std::int64_t k, std::int64_t alpha,
                                            double x);

struct PhiPsi {
  double phi = 0;
  double psi = 0;
};

// The pair (phi, psi) of the finite-N kernel, built from xi_k = phi_k/x:
//   phi = (-1)^N sqrt(a_N/2) (sqrt(N+alpha) xi_N - sqrt(N) xi_{N-1})
// and psi with the two prefactors exchanged.
PhiPsi phi_psi(const ShapeParams& sp, double x);

// Edge-rescaled versions: phi_tau(s) = sigma * phi(mu + sigma s).
PhiPsi phi_psi_tau(const ShapeParams& sp, double s);

// F_N(z) = (-1)^N sigma^{-1/2} sqrt(z) phi_N(z), the normalized edge function
// converging to Ai(s) at z = mu + sigma s.
double big_f_n(const ShapeParams& sp, double z);

}  // namespace rmt
