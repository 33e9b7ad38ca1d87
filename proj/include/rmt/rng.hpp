#pragma once

#include <array>
#include <cstdint>

namespace rmt {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).  A draw is
// addressed by (seed, stream, position): identical coordinates produce
// identical output on every run and thread, so Monte Carlo work can be
// fanned out with one stream per draw.
std::array<std::uint32_t, 4> philox4x32(std::uint64_t seed,
                                        std::uint64_t stream,
                                        std::uint64_t position);

// Sequential view of one (seed, stream) pair: uniforms, Box-Muller
// Gaussians, Marsaglia-Tsang gammas, chi-square.
class GaussianStream {
public:
  GaussianStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64();
  double next_uniform();   // strictly inside (0, 1)
  double next_gaussian();  // standard normal
  double next_gamma(double shape);  // unit scale, shape > 0
  double next_chi_squared(double dof) { return 2.0 * next_gamma(0.5 * dof); }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int buf_used_ = 4;  // words consumed from buf_
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

}  // namespace rmt
