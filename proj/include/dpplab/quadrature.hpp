#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dpplab/specfun.hpp"

// Gauss rules via Golub-Welsch on the Jacobi matrix of the weight's
// orthogonal polynomials.  Node sets are cached; all rules are pure data.

namespace dpplab::quad {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

namespace detail {

inline Rule golub_welsch(const std::vector<double>& alpha,
                         const std::vector<double>& beta, double mu0) {
  const int n = static_cast<int>(alpha.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = alpha[i];
    if (i + 1 < n) {
      J(i, i + 1) = beta[i + 1];
      J(i + 1, i) = beta[i + 1];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v * v;
  }
  return r;
}

template <typename Key>
const Rule& cached(std::map<Key, Rule>& cache, std::mutex& m, const Key& key,
                   const std::function<Rule()>& make) {
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make()).first;
  return it->second;
}

}  // namespace detail

// n-point Gauss-Legendre on [-1, 1].
//
// Weight-function Gauss rules (Hermite, Laguerre) are deliberately absent:
// their Golub-Welsch tail weights underflow the eigenvector accuracy in
// double precision, which turns high-degree integrands into noise.  All
// weighted integrals here go through composite Legendre panels with the
// weight written into the integrand.
inline const Rule& gauss_legendre(int n) {
  static std::map<int, Rule> cache;
  static std::mutex m;
  return detail::cached<int>(cache, m, n, [n] {
    std::vector<double> alpha(n, 0.0), beta(n, 0.0);
    for (int k = 1; k < n; ++k) beta[k] = k / std::sqrt(4.0 * k * k - 1.0);
    return detail::golub_welsch(alpha, beta, 2.0);
  });
}

// Composite Gauss-Legendre of f over [a, b] with `panels` panels of n points.
template <typename F>
double integrate(F&& f, double a, double b, int n = 32, int panels = 1) {
  if (!(b >= a)) throw std::invalid_argument("integrate: requires b >= a");
  const Rule& r = gauss_legendre(n);
  const double h = (b - a) / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      s += 0.5 * h * r.w[i] * f(lo + 0.5 * h * (r.x[i] + 1.0));
    }
  }
  return s;
}

}  // namespace dpplab::quad
