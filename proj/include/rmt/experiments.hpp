#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/tracy_widom.hpp"
#include "rmt/verify.hpp"

#include <json.hpp>

namespace rmt {

// Monte Carlo table experiment: for each (n, p) run reps draws, standardize
// l_1, and tabulate the empirical CDF at the reference quantiles.
struct ExperimentConfig {
  std::vector<std::pair<int, int>> dims;
  int reps = 10000;
  ScalingVariant variant = ScalingVariant::adjusted;
  Field field = Field::real;
  SamplePath path = SamplePath::tridiagonal;
  std::uint64_t seed = 29;
  int workers = 1;
  std::vector<double> reference_quantiles = {-3.90, -3.18, -2.78, -1.91, -1.27,
                                             -0.59, 0.45,  0.98,  2.02};

  void validate() const;
};

struct TableArtifact {
  std::string csv;                    // byte-stable for fixed config
  nlohmann::ordered_json sidecar;     // config + versions + column status
  Eigen::MatrixXd cells;              // rows = quantiles, cols = dims (NaN on error)
  std::vector<std::string> column_errors;  // empty string when a column is fine
};

TableArtifact run_table(const ExperimentConfig& config, const TwCdf& tw);

// Standardized draws of l_1 for one (n, p), fanned across workers with one
// Philox stream per draw; concatenated in worker order, then sorted.
std::vector<double> standardized_l1_draws(int n, int p, int reps, Field field,
                                          SamplePath path, std::uint64_t seed,
                                          int workers,
                                          const ScalingPair& scale);

struct PcaTestReport {
  int n = 0, p = 0;
  double l1 = 0;
  double s_value = 0;
  double p_value = 0;
  bool variance_warning = false;  // median column variance off 1 by > 20%
  double median_column_variance = 1.0;
};

// Null test of the largest covariance eigenvalue against TW1.
PcaTestReport pca_test(const Eigen::MatrixXd& data, ScalingVariant variant,
                       const TwCdf& tw1);

// Dense CSV matrix, rows = observations; ragged or non-numeric input throws
// io_error.
Eigen::MatrixXd parse_csv_matrix(std::istream& in);

enum class VerifySuite { identities, cphi, convergence, kernels };
VerifySuite suite_from_string(const std::string& s);

struct SuiteResult {
  nlohmann::ordered_json report;
  bool pass = false;
};

SuiteResult run_verify_suite(VerifySuite suite);

nlohmann::ordered_json to_json(const ConvergenceReport& r);

}  // namespace rmt
