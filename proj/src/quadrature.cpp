#include "rmt/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rmt {
namespace {

QuadratureRule make_legendre(int m) {
  QuadratureRule r;
  r.nodes.resize(m);
  r.weights.resize(m);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    r.nodes[i] = -z;
    r.nodes[m - 1 - i] = z;
    r.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.weights[m - 1 - i] = r.weights[i];
  }
  return r;
}

}  // namespace

const QuadratureRule& gauss_legendre(int m) {
  if (m < 1) throw std::domain_error("gauss_legendre: m must be >= 1");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, make_legendre(m)).first;
  return it->second;
}

QuadratureRule gauss_laguerre(int m, double alpha) {
  if (m < 1) throw std::domain_error("gauss_laguerre: m must be >= 1");
  if (alpha <= -1.0) throw std::domain_error("gauss_laguerre: alpha must be > -1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    J(k, k) = 2.0 * k + alpha + 1.0;
    if (k + 1 < m) {
      const double b = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
      J(k, k + 1) = b;
      J(k + 1, k) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_laguerre: eigensolver failed");
  QuadratureRule r;
  r.nodes = es.eigenvalues().array();
  const double mu0 = std::tgamma(alpha + 1.0);
  r.weights = mu0 * es.eigenvectors().row(0).array().square();
  return r;
}

}  // namespace rmt
