#include "rmt/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rmt/errors.hpp"

namespace rmt {
namespace {

ScalingPair make_pair_from(double a, double b, ScalingVariant v, int n, int p) {
  ScalingPair out;
  const double ra = std::sqrt(a), rb = std::sqrt(b);
  out.mu = (ra + rb) * (ra + rb);
  out.sigma = (ra + rb) * std::cbrt(1.0 / ra + 1.0 / rb);
  out.variant = v;
  out.n = n;
  out.p = p;
  return out;
}

Eigen::ArrayXd top_of(const Eigen::VectorXd& evals_ascending, int k) {
  Eigen::ArrayXd top(k);
  const auto m = evals_ascending.size();
  for (int i = 0; i < k; ++i) top[i] = evals_ascending[m - 1 - i];
  return top;
}

}  // namespace

ScalingPair scaling(int n, int p, ScalingVariant variant) {
  if (n < 1 || p < 1) throw std::domain_error("scaling: n, p must be >= 1");
  switch (variant) {
    case ScalingVariant::original: {
      const double n1 = std::max(n, p) - 1.0;
      const double p1 = std::min(n, p);
      if (!(n1 > 0.0) || !(p1 > 0.0))
        throw std::domain_error("scaling: original variant needs max(n,p) >= 2");
      return make_pair_from(n1, p1, variant, n, p);
    }
    case ScalingVariant::adjusted:
      return make_pair_from(n - 0.5, p - 0.5, variant, n, p);
    case ScalingVariant::section4:
      return make_pair_from(n + 0.5, p + 0.5, variant, n, p);
  }
  throw std::domain_error("scaling: unknown variant");
}

Eigen::MatrixXd gaussian_matrix(int n, int p, std::uint64_t seed,
                                std::uint64_t stream) {
  GaussianStream g(seed, stream);
  Eigen::MatrixXd X(n, p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = g.next_gaussian();
  return X;
}

Eigen::MatrixXcd complex_gaussian_matrix(int n, int p, std::uint64_t seed,
                                         std::uint64_t stream) {
  GaussianStream g(seed, stream);
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd X(n, p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = g.next_gaussian();
      const double im = g.next_gaussian();
      X(i, j) = std::complex<double>(re * inv_rt2, im * inv_rt2);
    }
  return X;
}

EigenSample sample_top_k(int n, int p, int k, Field field, std::uint64_t seed,
                         SamplePath path, std::uint64_t stream) {
  if (n < 1 || p < 1) throw std::domain_error("sample_top_k: n, p must be >= 1");
  if (k < 1 || k > std::min(n, p))
    throw std::domain_error("sample_top_k: k must lie in [1, min(n,p)]");
  if (path == SamplePath::tridiagonal && field != Field::real)
    throw std::domain_error("sample_top_k: tridiagonal path is real-only");

  EigenSample out;
  out.n = n;
  out.p = p;
  out.k = k;
  out.field = field;
  out.path = path;
  out.seed = seed;
  out.stream = stream;

  const int m = std::min(n, p);
  if (path == SamplePath::tridiagonal) {
    const int dof = std::max(n, p);
    GaussianStream g(seed, stream);
    Eigen::VectorXd d(m), e(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i)
      d[i] = std::sqrt(g.next_chi_squared(static_cast<double>(dof - i)));
    for (int i = 0; i < m - 1; ++i)
      e[i] = std::sqrt(g.next_chi_squared(static_cast<double>(m - 1 - i)));
    // T = B B^T for the lower bidiagonal B = diag(d) + subdiag(e)
    Eigen::VectorXd diag(m), off(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i)
      diag[i] = d[i] * d[i] + (i > 0 ? e[i - 1] * e[i - 1] : 0.0);
    for (int i = 0; i < m - 1; ++i) off[i] = d[i] * e[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw numeric_error("sample_top_k: tridiagonal eigensolve failed, seed " +
                          std::to_string(seed) + " stream " +
                          std::to_string(stream));
    out.top = top_of(es.eigenvalues(), k);
    return out;
  }

  if (field == Field::real) {
    const Eigen::MatrixXd X = gaussian_matrix(n, p, seed, stream);
    const Eigen::MatrixXd G =
        (n <= p) ? Eigen::MatrixXd(X * X.transpose())
                 : Eigen::MatrixXd(X.transpose() * X);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw numeric_error("sample_top_k: dense eigensolve failed, seed " +
                          std::to_string(seed));
    out.top = top_of(es.eigenvalues(), k);
  } else {
    const Eigen::MatrixXcd X = complex_gaussian_matrix(n, p, seed, stream);
    const Eigen::MatrixXcd G =
        (n <= p) ? Eigen::MatrixXcd(X * X.adjoint())
                 : Eigen::MatrixXcd(X.adjoint() * X);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw numeric_error("sample_top_k: hermitian eigensolve failed, seed " +
                          std::to_string(seed));
    out.top = top_of(es.eigenvalues(), k);
  }
  return out;
}

double EmpiricalCdf::operator()(double t) const {
  const double* b = standardized.data();
  const double* e = b + standardized.size();
  return static_cast<double>(std::upper_bound(b, e, t) - b) /
         static_cast<double>(count);
}

EmpiricalCdf empirical_cdf(const std::vector<EigenSample>& samples,
                           const ScalingPair& scale) {
  if (samples.empty()) throw std::domain_error("empirical_cdf: no samples");
  EmpiricalCdf out;
  out.count = static_cast<std::int64_t>(samples.size());
  out.standardized.resize(out.count);
  for (std::int64_t i = 0; i < out.count; ++i) {
    const EigenSample& s = samples[static_cast<std::size_t>(i)];
    if (s.n != samples[0].n || s.p != samples[0].p)
      throw std::domain_error("empirical_cdf: mixed (n, p) shapes");
    out.standardized[i] = (s.top[0] - scale.mu) / scale.sigma;
  }
  std::sort(out.standardized.data(),
            out.standardized.data() + out.standardized.size());
  return out;
}

const char* to_string(Field f) {
  return f == Field::real ? "real" : "complex";
}
const char* to_string(SamplePath p) {
  return p == SamplePath::dense ? "dense" : "tridiagonal";
}
const char* to_string(ScalingVariant v) {
  switch (v) {
    case ScalingVariant::original: return "original";
    case ScalingVariant::adjusted: return "adjusted";
    case ScalingVariant::section4: return "section4";
  }
  return "?";
}
Field field_from_string(const std::string& s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::complex_gauss;
  throw std::domain_error("unknown field: " + s);
}
SamplePath path_from_string(const std::string& s) {
  if (s == "dense") return SamplePath::dense;
  if (s == "tridiagonal") return SamplePath::tridiagonal;
  throw std::domain_error("unknown path: " + s);
}
ScalingVariant variant_from_string(const std::string& s) {
  if (s == "original") return ScalingVariant::original;
  if (s == "adjusted") return ScalingVariant::adjusted;
  if (s == "section4") return ScalingVariant::section4;
  throw std::domain_error("unknown variant: " + s);
}

void dump_samples(std::ostream& out, const std::vector<EigenSample>& samples) {
  if (samples.empty()) throw std::domain_error("dump_samples: no samples");
  const EigenSample& h = samples.front();
  out << "n,p,k,field,path,seed\n";
  out << h.n << "," << h.p << "," << h.k << "," << to_string(h.field) << ","
      << to_string(h.path) << "," << h.seed << "\n";
  out << "draw";
  for (int i = 0; i < h.k; ++i) out << ",top" << (i + 1);
  out << "\n";
  char num[40];
  for (const EigenSample& s : samples) {
    out << s.stream;
    for (int i = 0; i < s.k; ++i) {
      std::snprintf(num, sizeof num, "%.17g", s.top[i]);
      out << "," << num;
    }
    out << "\n";
  }
}

std::vector<EigenSample> load_samples(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,p,k,field,path,seed")
    throw io_error("load_samples: bad header line");
  if (!std::getline(in, line)) throw io_error("load_samples: missing metadata");
  std::istringstream meta(line);
  std::string tok;
  std::vector<std::string> parts;
  while (std::getline(meta, tok, ',')) parts.push_back(tok);
  if (parts.size() != 6) throw io_error("load_samples: bad metadata line");
  const int n = std::stoi(parts[0]);
  const int p = std::stoi(parts[1]);
  const int k = std::stoi(parts[2]);
  const Field field = field_from_string(parts[3]);
  const SamplePath path = path_from_string(parts[4]);
  const std::uint64_t seed = std::stoull(parts[5]);
  if (!std::getline(in, line)) throw io_error("load_samples: missing column line");
  std::vector<EigenSample> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    EigenSample s;
    s.n = n; s.p = p; s.k = k;
    s.field = field;
    s.path = path;
    s.seed = seed;
    s.top.resize(k);
    if (!std::getline(row, tok, ',')) throw io_error("load_samples: short row");
    s.stream = std::stoull(tok);
    for (int i = 0; i < k; ++i) {
      if (!std::getline(row, tok, ',')) throw io_error("load_samples: short row");
      s.top[i] = std::stod(tok);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rmt
