#include "rmt/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {
namespace {

constexpr std::uint32_t kW32A = 0x9E3779B9u;
constexpr std::uint32_t kW32B = 0xBB67AE85u;
constexpr std::uint32_t kM4x32A = 0xD2511F53u;
constexpr std::uint32_t kM4x32B = 0xCD9E8D57u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, std::uint32_t k0,
                       std::uint32_t k1) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kM4x32A) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kM4x32B) * ctr[2];
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::uint64_t seed,
                                        std::uint64_t stream,
                                        std::uint64_t position) {
  std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(position),
      static_cast<std::uint32_t>(position >> 32),
      static_cast<std::uint32_t>(stream),
      static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t k0 = static_cast<std::uint32_t>(seed);
  std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
  for (int r = 0; r < 10; ++r) {
    round_once(ctr, k0, k1);
    k0 += kW32A;
    k1 += kW32B;
  }
  return ctr;
}

std::uint64_t GaussianStream::next_u64() {
  if (buf_used_ >= 3) {  // need two fresh words
    buf_ = philox4x32(seed_, stream_, position_++);
    buf_used_ = 0;
  }
  const std::uint64_t hi = buf_[buf_used_];
  const std::uint64_t lo = buf_[buf_used_ + 1];
  buf_used_ += 2;
  return (hi << 32) | lo;
}

double GaussianStream::next_uniform() {
  // 53-bit mantissa offset by half an ulp: lands strictly inside (0, 1)
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

double GaussianStream::next_gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  cached_gaussian_ = r * std::sin(a);
  has_cached_gaussian_ = true;
  return r * std::cos(a);
}

double GaussianStream::next_gamma(double shape) {
  if (!(shape > 0.0)) throw std::domain_error("next_gamma: shape must be > 0");
  if (shape < 1.0) {
    const double boost = std::pow(next_uniform(), 1.0 / shape);
    return next_gamma(shape + 1.0) * boost;
  }
  // Marsaglia-Tsang squeeze
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = next_gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace rmt
