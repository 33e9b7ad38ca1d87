#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/errors.hpp"
#include "rmt/experiments.hpp"
#include "rmt/tracy_widom.hpp"
#include "rmt/version.hpp"

namespace {

std::vector<std::pair<int, int>> parse_dims(const std::vector<std::string>& specs) {
  std::vector<std::pair<int, int>> dims;
  for (const std::string& spec : specs) {
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto x = item.find('x');
      if (x == std::string::npos)
        throw std::domain_error("bad --dims entry (want NxP): " + item);
      dims.emplace_back(std::stoi(item.substr(0, x)),
                        std::stoi(item.substr(x + 1)));
    }
  }
  return dims;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw rmt::io_error("cannot open for writing: " + path);
  out << body;
  if (!out) throw rmt::io_error("short write: " + path);
}

int run(int argc, char** argv) {
  CLI::App app{"Tracy-Widom laws and white Wishart largest-eigenvalue tools"};
  app.set_version_flag("--version", RMT_VERSION);
  app.require_subcommand(1);

  // --- table ---
  auto* table = app.add_subcommand(
      "table", "Empirical CDF of standardized l_1 at reference quantiles");
  std::vector<std::string> dim_specs{"10x1000"};
  int reps = 10000, workers = 1;
  std::string variant = "adjusted", field = "real", path_kind = "tridiagonal";
  std::uint64_t seed = 29;
  std::string out_prefix;
  table->add_option("--dims", dim_specs, "Dimension pairs, e.g. 5x200,10x1000");
  table->add_option("--reps", reps, "Monte Carlo replicates per pair");
  table->add_option("--variant", variant, "original|adjusted|section4");
  table->add_option("--field", field, "real|complex");
  table->add_option("--path", path_kind, "dense|tridiagonal");
  table->add_option("--seed", seed, "Master seed");
  table->add_option("--workers", workers, "Worker thread count");
  table->add_option("--out", out_prefix, "Write <out>.csv and <out>.json");

  // --- tw ---
  auto* twc = app.add_subcommand("tw", "Evaluate a Tracy-Widom CDF or quantile");
  std::string which = "tw1", mode = "cdf";
  double value = 0.0;
  twc->add_option("which", which, "tw1|tw2")->required();
  twc->add_option("mode", mode, "cdf|quantile")->required();
  twc->add_option("value", value, "s for cdf, p for quantile")->required();

  // --- pca-test ---
  auto* pca = app.add_subcommand(
      "pca-test", "Largest-eigenvalue null test of a data matrix against TW1");
  std::string input_path, pca_variant = "adjusted";
  pca->add_option("input", input_path, "CSV matrix, rows = observations")
      ->required();
  pca->add_option("--variant", pca_variant, "original|adjusted|section4");

  // --- verify ---
  auto* ver = app.add_subcommand("verify", "Run a named verification suite");
  std::string suite = "identities";
  ver->add_option("suite", suite, "identities|cphi|convergence|kernels")
      ->required();

  // --- sample-dump ---
  auto* dump = app.add_subcommand("sample-dump", "Write raw top-k draws as CSV");
  int dn = 20, dp = 5, dk = 1, dreps = 100;
  std::string dfield = "real", dpath = "tridiagonal", dump_out;
  std::uint64_t dseed = 29;
  dump->add_option("--n", dn, "Rows");
  dump->add_option("--p", dp, "Columns");
  dump->add_option("--k", dk, "Top-k eigenvalues per draw");
  dump->add_option("--reps", dreps, "Number of draws");
  dump->add_option("--field", dfield, "real|complex");
  dump->add_option("--path", dpath, "dense|tridiagonal");
  dump->add_option("--seed", dseed, "Master seed");
  dump->add_option("--out", dump_out, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (table->parsed()) {
    rmt::ExperimentConfig cfg;
    cfg.dims = parse_dims(dim_specs);
    cfg.reps = reps;
    cfg.variant = rmt::variant_from_string(variant);
    cfg.field = rmt::field_from_string(field);
    cfg.path = rmt::path_from_string(path_kind);
    cfg.seed = seed;
    cfg.workers = workers;
    const rmt::TwCdf tw = rmt::make_tw_cdf(
        cfg.field == rmt::Field::real ? rmt::TwLaw::tw1 : rmt::TwLaw::tw2);
    const rmt::TableArtifact art = rmt::run_table(cfg, tw);
    if (out_prefix.empty()) {
      std::cout << art.csv;
    } else {
      write_file(out_prefix + ".csv", art.csv);
      write_file(out_prefix + ".json", art.sidecar.dump(2) + "\n");
    }
    for (std::size_t c = 0; c < art.column_errors.size(); ++c)
      if (!art.column_errors[c].empty())
        std::cerr << "column " << cfg.dims[c].first << "x" << cfg.dims[c].second
                  << " failed: " << art.column_errors[c] << "\n";
    return 0;
  }

  if (twc->parsed()) {
    const rmt::TwLaw law = [&] {
      if (which == "tw1") return rmt::TwLaw::tw1;
      if (which == "tw2") return rmt::TwLaw::tw2;
      throw std::domain_error("tw: which must be tw1 or tw2");
    }();
    const rmt::TwCdf tw = rmt::make_tw_cdf(law);
    double out = 0;
    if (mode == "cdf") {
      out = rmt::cdf(tw, value);
    } else if (mode == "quantile") {
      out = rmt::quantile(tw, value);
    } else {
      throw std::domain_error("tw: mode must be cdf or quantile");
    }
    std::printf("%.6f\n", out);
    return 0;
  }

  if (pca->parsed()) {
    std::ifstream in(input_path);
    if (!in) throw rmt::io_error("cannot read: " + input_path);
    const Eigen::MatrixXd data = rmt::parse_csv_matrix(in);
    const rmt::TwCdf tw1 = rmt::make_tw_cdf(rmt::TwLaw::tw1);
    const rmt::PcaTestReport rep =
        rmt::pca_test(data, rmt::variant_from_string(pca_variant), tw1);
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["l1"] = rep.l1;
    j["s"] = rep.s_value;
    j["p_value"] = rep.p_value;
    j["variance_warning"] = rep.variance_warning;
    j["median_column_variance"] = rep.median_column_variance;
    std::cout << j.dump(2) << "\n";
    if (rep.variance_warning)
      std::cerr << "warning: column variances deviate from 1 by more than 20%; "
                   "the null model assumes unit-variance entries\n";
    return 0;
  }

  if (ver->parsed()) {
    const rmt::SuiteResult res =
        rmt::run_verify_suite(rmt::suite_from_string(suite));
    std::cout << res.report.dump(2) << "\n";
    return res.pass ? 0 : 1;
  }

  if (dump->parsed()) {
    std::vector<rmt::EigenSample> samples;
    samples.reserve(static_cast<std::size_t>(dreps));
    for (int d = 0; d < dreps; ++d)
      samples.push_back(rmt::sample_top_k(
          dn, dp, dk, rmt::field_from_string(dfield), dseed,
          rmt::path_from_string(dpath), static_cast<std::uint64_t>(d)));
    if (dump_out.empty()) {
      rmt::dump_samples(std::cout, samples);
    } else {
      std::ofstream out(dump_out);
      if (!out) throw rmt::io_error("cannot open for writing: " + dump_out);
      rmt::dump_samples(out, samples);
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rmt::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
