#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rmt/rng.hpp"

namespace rmt {

enum class ScalingVariant { original, adjusted, section4 };
enum class Field { real, complex_gauss };
enum class SamplePath { dense, tridiagonal };

// Centering/scaling pair standardizing the largest eigenvalue of X*X.
//   original: n1 = max(n,p)-1, p1 = min(n,p),
//             mu = (sqrt(n1)+sqrt(p1))^2, sigma = (sqrt(n1)+sqrt(p1))
//             (1/sqrt(n1)+1/sqrt(p1))^{1/3}
//   adjusted: same shape with n-1/2 and p-1/2
//   section4: same shape with n+1/2 and p+1/2
struct ScalingPair {
  double mu = 0;
  double sigma = 0;
  ScalingVariant variant = ScalingVariant::adjusted;
  int n = 0, p = 0;
};

ScalingPair scaling(int n, int p, ScalingVariant variant);

// Top-k eigenvalues of one sampled white Wishart matrix.
struct EigenSample {
  Eigen::ArrayXd top;  // descending, length k
  int n = 0, p = 0, k = 0;
  Field field = Field::real;
  SamplePath path = SamplePath::dense;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // draw index within the seed
};

// One draw.  The dense path fills X with iid standard (real or complex)
// Gaussians and solves the smaller Gram matrix; the tridiagonal path samples
// the bidiagonal model equal in distribution to the real Wishart spectrum
// (chi entries with dof max, max-1, ... and min-1, min-2, ...).
EigenSample sample_top_k(int n, int p, int k, Field field, std::uint64_t seed,
                         SamplePath path, std::uint64_t stream = 0);

// The Gaussian data matrix a dense draw would use (column-major fill, one
// stream per draw); exposed so tests can replay a draw.
Eigen::MatrixXd gaussian_matrix(int n, int p, std::uint64_t seed,
                                std::uint64_t stream);
Eigen::MatrixXcd complex_gaussian_matrix(int n, int p, std::uint64_t seed,
                                         std::uint64_t stream);

// Sorted standardized values of l_1 supporting CDF evaluation.
struct EmpiricalCdf {
  Eigen::ArrayXd standardized;  // ascending
  std::int64_t count = 0;

  double operator()(double t) const;  // #{x <= t} / count
};

EmpiricalCdf empirical_cdf(const std::vector<EigenSample>& samples,
                           const ScalingPair& scale);

// CSV dump: a (n,p,k,field,path,seed) header, then one row per draw with the
// top-k values at full precision.
void dump_samples(std::ostream& out, const std::vector<EigenSample>& samples);
std::vector<EigenSample> load_samples(std::istream& in);

const char* to_string(Field f);
const char* to_string(SamplePath p);
const char* to_string(ScalingVariant v);
Field field_from_string(const std::string& s);
SamplePath path_from_string(const std::string& s);
ScalingVariant variant_from_string(const std::string& s);

}  // namespace rmt
