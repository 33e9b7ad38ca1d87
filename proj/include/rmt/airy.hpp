#pragma once

namespace rmt {

// Airy function of the first kind and its derivative.
// Absolute error <= 1e-12 on [-15, 15]; underflows to 0 for large positive x.
// Non-finite input throws std::domain_error.
double airy_ai(double x);
double airy_ai_prime(double x);

}  // namespace rmt
