#pragma once

#include <memory>

#include "rmt/painleve.hpp"

namespace rmt {

enum class TwLaw { tw1, tw2 };

// Tracy-Widom distribution function backed by an immutable Painleve table:
//   F2(s) = exp(-i2(s)),  F1(s) = exp(-(i1(s) + i2(s))/2).
// Readers are lock-free; the table may be shared freely across threads.
struct TwCdf {
  TwLaw which = TwLaw::tw1;
  std::shared_ptr<const PainleveSolution> solution;

  double s_min() const { return solution->s_min; }
  double s_max() const { return solution->s_max; }
};

TwCdf make_tw_cdf(TwLaw which,
                  std::shared_ptr<const PainleveSolution> solution);
// Convenience: solve (or load from RMT_TW_CACHE) with default parameters.
TwCdf make_tw_cdf(TwLaw which);

// CDF value; s is clamped to the table domain with exact 0/1 outside.
double cdf(const TwCdf& tw, double s);

// Inverse CDF by bisection plus Newton polish, |cdf(result) - p| <= 1e-8.
double quantile(const TwCdf& tw, double p);

// Independent route to F2: Nystrom discretization of the Airy kernel on
// [s, s+T] with Gauss-Legendre nodes and the symmetrized matrix
// W^{1/2} K W^{1/2}; returns det(I - K).  nodes must be a power of two in
// [16, 512].  Checked against the halved rule; disagreement beyond 1e-6
// raises numeric_error carrying both iterates.
double fredholm_f2(double s, int nodes);

}  // namespace rmt
