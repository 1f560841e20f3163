#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpplab/quadrature.hpp"
#include "dpplab/specfun.hpp"

// Correlation kernels of the determinantal families, their background
// measures, elementary transforms, and the determinantal correlation
// functions built from them.

namespace dpplab::kernels {

using Complex = std::complex<double>;
namespace sf = dpplab::specfun;

// A point in a kernel domain: d complex coordinates.  Scalar domains use
// d = 1 (real domains with zero imaginary part); discrete domains store the
// index in the real part.
struct Point {
  std::vector<Complex> c;

  Point() : c(1, Complex(0.0, 0.0)) {}
  explicit Point(double x) : c(1, Complex(x, 0.0)) {}
  explicit Point(Complex z) : c(1, z) {}
  explicit Point(std::vector<Complex> v) : c(std::move(v)) {}

  static Point index(int n) { return Point(static_cast<double>(n)); }
  static Point real_vec(const std::vector<double>& v) {
    std::vector<Complex> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Complex(v[i], 0.0);
    return Point(std::move(w));
  }

  double x() const { return c[0].real(); }
  Complex z() const { return c[0]; }
  int dim() const { return static_cast<int>(c.size()); }
};

enum class Family {
  HermiteN,
  LaguerreN,
  RootA,
  RootB,
  RootC,
  RootD,
  Sinc,
  Airy,
  Bessel,
  GinibreA,
  GinibreC,
  GinibreD,
  GinibreType,
  Euclidean,
  Heisenberg,
  DiscreteHermite,
  DiscreteLaguerre,
};

enum class Domain {
  RealLine,      // R
  HalfLine,      // R_{>=0}
  CircleFull,    // [0, 2 pi)
  HalfCircle,    // [0, pi]
  ComplexPlane,  // C (or C^d)
  RealSpace,     // R^d
  Naturals,      // N_0
};

struct Transform {
  enum class Op { Shift, Dilate, SqrtMap } op;
  double value = 0.0;  // shift offset or dilation factor
};

struct KernelSpec {
  Family family;
  int N = 0;       // number of points for finite families
  double nu = 0.0; // Laguerre / Bessel / DiscreteLaguerre parameter
  int q = 0;       // Ginibre-type index
  int dim = 1;     // Euclidean / Heisenberg dimension
  double r = 0.0;  // window edge for the discrete kernels
  std::vector<Transform> transforms;  // applied in order, innermost first

  static KernelSpec hermite(int N) { return make(Family::HermiteN, N); }
  static KernelSpec laguerre(int N, double nu) {
    if (nu <= -1.0) throw std::invalid_argument("Laguerre kernel: nu > -1");
    KernelSpec s = make(Family::LaguerreN, N);
    s.nu = nu;
    return s;
  }
  static KernelSpec root(char type, int N) {
    switch (type) {
      case 'A': return make(Family::RootA, N);
      case 'B': return make(Family::RootB, N);
      case 'C': return make(Family::RootC, N);
      case 'D': return make(Family::RootD, N);
    }
    throw std::invalid_argument("root system type must be A, B, C, or D");
  }
  static KernelSpec sinc() { return make(Family::Sinc, 0); }
  static KernelSpec airy() { return make(Family::Airy, 0); }
  static KernelSpec bessel(double nu) {
    if (nu <= -1.0) throw std::invalid_argument("Bessel kernel: nu > -1");
    KernelSpec s = make(Family::Bessel, 0);
    s.nu = nu;
    return s;
  }
  static KernelSpec ginibre(char type) {
    switch (type) {
      case 'A': return make(Family::GinibreA, 0);
      case 'C': return make(Family::GinibreC, 0);
      case 'D': return make(Family::GinibreD, 0);
    }
    throw std::invalid_argument("Ginibre type must be A, C, or D");
  }
  static KernelSpec ginibre_type(int q) {
    if (q < 0) throw std::invalid_argument("Ginibre-type: q >= 0");
    KernelSpec s = make(Family::GinibreType, 0);
    s.q = q;
    return s;
  }
  static KernelSpec euclidean(int d) {
    if (d < 1) throw std::invalid_argument("Euclidean family: d >= 1");
    KernelSpec s = make(Family::Euclidean, 0);
    s.dim = d;
    return s;
  }
  static KernelSpec heisenberg(int d) {
    if (d < 1) throw std::invalid_argument("Heisenberg family: d >= 1");
    KernelSpec s = make(Family::Heisenberg, 0);
    s.dim = d;
    return s;
  }
  static KernelSpec discrete_hermite(double r) {
    KernelSpec s = make(Family::DiscreteHermite, 0);
    s.r = r;
    return s;
  }
  static KernelSpec discrete_laguerre(double r, double nu) {
    if (r <= 0.0)
      throw std::invalid_argument("discrete Laguerre requires r > 0");
    KernelSpec s = make(Family::DiscreteLaguerre, 0);
    s.r = r;
    s.nu = nu;
    return s;
  }

  Domain domain() const {
    switch (family) {
      case Family::HermiteN:
      case Family::Sinc:
      case Family::Airy: return Domain::RealLine;
      case Family::LaguerreN:
      case Family::Bessel: return Domain::HalfLine;
      case Family::RootA: return Domain::CircleFull;
      case Family::RootB:
      case Family::RootC:
      case Family::RootD: return Domain::HalfCircle;
      case Family::GinibreA:
      case Family::GinibreC:
      case Family::GinibreD:
      case Family::GinibreType:
      case Family::Heisenberg: return Domain::ComplexPlane;
      case Family::Euclidean: return Domain::RealSpace;
      case Family::DiscreteHermite:
      case Family::DiscreteLaguerre: return Domain::Naturals;
    }
    throw std::logic_error("unreachable");
  }

 private:
  static KernelSpec make(Family f, int N) {
    KernelSpec s;
    s.family = f;
    s.N = N;
    if ((f == Family::HermiteN || f == Family::LaguerreN ||
         f == Family::RootA || f == Family::RootB || f == Family::RootC ||
         f == Family::RootD) &&
        N < 1)
      throw std::invalid_argument("finite kernel family requires N >= 1");
    return s;
  }
};

namespace detail {

inline constexpr double kDiagEps = 1e-8;

// sin(M v)/sin(v), regular at the zeros of the denominator
inline double sin_ratio(double M, double v) {
  const double s = std::sin(v);
  if (std::abs(s) < 1e-7) return M * std::cos(M * v) / std::cos(v);
  return std::sin(M * v) / s;
}

inline double hermite_sum_diag(int N, double x) {
  double s = 0.0;
  for (int n = 0; n < N; ++n) {
    const double p = sf::phi_hermite(n, x);
    s += p * p;
  }
  return s;
}

inline double laguerre_sum_diag(int N, double nu, double x) {
  double s = 0.0;
  for (int n = 0; n < N; ++n) {
    const double p = sf::phi_laguerre(n, nu, x);
    s += p * p;
  }
  return s;
}

inline double hermite_cd(int N, double x, double y) {
  if (std::abs(x - y) < kDiagEps) return hermite_sum_diag(N, 0.5 * (x + y));
  const double a = sf::phi_hermite(N, x) * sf::phi_hermite(N - 1, y) -
                   sf::phi_hermite(N, y) * sf::phi_hermite(N - 1, x);
  return std::sqrt(N / 2.0) * a / (x - y);
}

inline double laguerre_cd(int N, double nu, double x, double y) {
  if (std::abs(x - y) < kDiagEps)
    return laguerre_sum_diag(N, nu, 0.5 * (x + y));
  const double a = sf::phi_laguerre(N, nu, x) * sf::phi_laguerre(N - 1, nu, y) -
                   sf::phi_laguerre(N, nu, y) * sf::phi_laguerre(N - 1, nu, x);
  return -std::sqrt(N * (N + nu)) * a / (x - y);
}

inline double sinc_kernel(double u) {
  if (std::abs(u) < 1e-6) return (1.0 - u * u / 6.0) / sf::pi;
  return std::sin(u) / (sf::pi * u);
}

inline double airy_kernel(double x, double y) {
  if (std::abs(x - y) < kDiagEps) {
    const double m = 0.5 * (x + y);
    const double a = sf::airy(m), ap = sf::airy_prime(m);
    return ap * ap - m * a * a;
  }
  return (sf::airy(x) * sf::airy_prime(y) - sf::airy(y) * sf::airy_prime(x)) /
         (x - y);
}

inline double bessel_kernel(double nu, double x, double y) {
  if (std::abs(x - y) < kDiagEps) {
    const double m = 0.5 * (x + y);
    if (m == 0.0) return 0.0;
    const double jn = sf::bessel_j(nu, m);
    const double jp = sf::bessel_j(nu + 1.0, m);
    const double jm = (2.0 * nu / m) * jn - jp;  // J_{nu-1}
    return m * (jn * jn - jm * jp) / 2.0;
  }
  const double t = sf::bessel_j(nu, x) * y * sf::bessel_j_prime(nu, y) -
                   x * sf::bessel_j_prime(nu, x) * sf::bessel_j(nu, y);
  return std::sqrt(x * y) * t / (x * x - y * y);
}

// integral over [r, inf) of phi_n phi_m d lambda, 200-point composite rule
inline double hermite_window_integral(int n, int m, double r) {
  const double upper =
      std::max(r + 1.0, std::sqrt(2.0 * std::max(n, m) + 1.0) + 12.0);
  if (upper <= r) return 0.0;
  return quad::integrate(
      [n, m](double x) {
        return sf::phi_hermite(n, x) * sf::phi_hermite(m, x) *
               std::exp(-x * x) / std::sqrt(sf::pi);
      },
      r, upper, 50, 8);
}

inline double laguerre_window_integral(int n, int m, double nu, double r) {
  if (r < 0.0) r = 0.0;
  const double upper = std::max(4.0 * std::max(n, m) + 2.0 * nu + 40.0, r + 10.0);
  const double lg = sf::lgamma_fn(nu + 1.0);
  // x = u^2 removes the x^nu endpoint singularity for nu < 0
  return quad::integrate(
      [n, m, nu, lg](double u) {
        const double x = u * u;
        return sf::phi_laguerre(n, nu, x) * sf::phi_laguerre(m, nu, x) * 2.0 *
               std::exp((2.0 * nu + 1.0) * std::log(u) - x - lg);
      },
      std::sqrt(r), std::sqrt(upper), 50, 10);
}

inline double discrete_hermite(double r, int n, int m) {
  if (n == m) return hermite_window_integral(n, n, r);
  const double a = std::sqrt(n + 1.0) * sf::phi_hermite(n + 1, r) *
                       sf::phi_hermite(m, r) -
                   std::sqrt(m + 1.0) * sf::phi_hermite(n, r) *
                       sf::phi_hermite(m + 1, r);
  return -std::exp(-r * r) / std::sqrt(2.0 * sf::pi) * a / (n - m);
}

// The overall sign follows the quadrature definition of the window Gram
// matrix; the transcription of this display drops a minus sign.
inline double discrete_laguerre(double r, double nu, int n, int m) {
  if (n == m) return laguerre_window_integral(n, n, nu, r);
  const double norm = std::exp(
      0.5 * (sf::lgamma_fn(n + 1.0) + sf::lgamma_fn(m + 1.0) -
             sf::lgamma_fn(n + nu + 1.0) - sf::lgamma_fn(m + nu + 1.0)));
  auto lag = [&](int k, double a) {
    return k < 0 ? 0.0 : sf::laguerre(k, a, r);
  };
  const double num = lag(n - 1, nu + 1.0) * lag(m, nu) -
                     lag(n, nu) * lag(m - 1, nu + 1.0);
  return -norm * std::exp((nu + 1.0) * std::log(r) - r) * num / (n - m);
}

}  // namespace detail

// Kernel evaluation before transforms.
inline Complex eval_base(const KernelSpec& s, const Point& px, const Point& py) {
  switch (s.family) {
    case Family::HermiteN:
      return detail::hermite_cd(s.N, px.x(), py.x());
    case Family::LaguerreN: {
      if (px.x() < 0.0 || py.x() < 0.0)
        throw std::domain_error("Laguerre kernel lives on x >= 0");
      return detail::laguerre_cd(s.N, s.nu, px.x(), py.x());
    }
    case Family::RootA:
      return detail::sin_ratio(s.N, 0.5 * (px.x() - py.x()));
    case Family::RootB:
      return 0.5 * (detail::sin_ratio(2.0 * s.N, 0.5 * (px.x() - py.x())) -
                    detail::sin_ratio(2.0 * s.N, 0.5 * (px.x() + py.x())));
    case Family::RootC:
      return 0.5 * (detail::sin_ratio(2.0 * s.N + 1.0, 0.5 * (px.x() - py.x())) -
                    detail::sin_ratio(2.0 * s.N + 1.0, 0.5 * (px.x() + py.x())));
    case Family::RootD:
      return 0.5 * (detail::sin_ratio(2.0 * s.N - 1.0, 0.5 * (px.x() - py.x())) +
                    detail::sin_ratio(2.0 * s.N - 1.0, 0.5 * (px.x() + py.x())));
    case Family::Sinc:
      return detail::sinc_kernel(px.x() - py.x());
    case Family::Airy:
      return detail::airy_kernel(px.x(), py.x());
    case Family::Bessel: {
      if (px.x() < 0.0 || py.x() < 0.0)
        throw std::domain_error("Bessel kernel lives on x >= 0");
      return detail::bessel_kernel(s.nu, px.x(), py.x());
    }
    case Family::GinibreA:
      return std::exp(px.z() * std::conj(py.z()));
    case Family::GinibreC:
      return std::sinh(px.z() * std::conj(py.z()));
    case Family::GinibreD:
      return std::cosh(px.z() * std::conj(py.z()));
    case Family::GinibreType: {
      const double d2 = std::norm(px.z() - py.z());
      return sf::laguerre(s.q, 0.0, d2) * std::exp(px.z() * std::conj(py.z()));
    }
    case Family::Euclidean: {
      if (px.dim() != s.dim || py.dim() != s.dim)
        throw std::domain_error("Euclidean kernel: wrong point dimension");
      double s2 = 0.0;
      for (int a = 0; a < s.dim; ++a) {
        const double d = px.c[a].real() - py.c[a].real();
        s2 += d * d;
      }
      const double dist = std::sqrt(s2);
      if (dist < 1e-7)
        return 1.0 / (std::pow(2.0, s.dim) * std::pow(sf::pi, s.dim / 2.0) *
                      sf::gamma_fn((s.dim + 2.0) / 2.0));
      return sf::bessel_j(s.dim / 2.0, dist) /
             (std::pow(2.0 * sf::pi, s.dim / 2.0) * std::pow(dist, s.dim / 2.0));
    }
    case Family::Heisenberg: {
      if (px.dim() != s.dim || py.dim() != s.dim)
        throw std::domain_error("Heisenberg kernel: wrong point dimension");
      Complex ip = 0.0;
      for (int a = 0; a < s.dim; ++a) ip += px.c[a] * std::conj(py.c[a]);
      return std::exp(ip);
    }
    case Family::DiscreteHermite: {
      const int n = static_cast<int>(std::lround(px.x()));
      const int m = static_cast<int>(std::lround(py.x()));
      if (n < 0 || m < 0) throw std::domain_error("discrete kernel index < 0");
      return detail::discrete_hermite(s.r, n, m);
    }
    case Family::DiscreteLaguerre: {
      const int n = static_cast<int>(std::lround(px.x()));
      const int m = static_cast<int>(std::lround(py.x()));
      if (n < 0 || m < 0) throw std::domain_error("discrete kernel index < 0");
      return detail::discrete_laguerre(s.r, s.nu, n, m);
    }
  }
  throw std::logic_error("unreachable");
}

namespace detail {

// Map an argument of the transformed kernel to the base kernel's domain.
inline Point pull_back(const KernelSpec& s, Point p) {
  for (auto it = s.transforms.rbegin(); it != s.transforms.rend(); ++it) {
    switch (it->op) {
      case Transform::Op::Shift:
        for (auto& z : p.c) z += it->value;
        break;
      case Transform::Op::Dilate:
        for (auto& z : p.c) z /= it->value;
        break;
      case Transform::Op::SqrtMap:
        for (auto& z : p.c) z *= z;
        break;
    }
  }
  return p;
}

}  // namespace detail

inline Complex eval_kernel(const KernelSpec& s, const Point& x, const Point& y) {
  if (s.transforms.empty()) return eval_base(s, x, y);
  KernelSpec base = s;
  base.transforms.clear();
  return eval_base(base, detail::pull_back(s, x), detail::pull_back(s, y));
}

inline Complex eval_kernel(const KernelSpec& s, double x, double y) {
  return eval_kernel(s, Point(x), Point(y));
}

inline double density(const KernelSpec& s, const Point& x) {
  const Complex k = eval_kernel(s, x, x);
  if (std::abs(k.imag()) > 1e-10 * (1.0 + std::abs(k.real())))
    throw std::runtime_error("density: non-real diagonal");
  return k.real();
}

inline double density(const KernelSpec& s, double x) { return density(s, Point(x)); }

// Radon-Nikodym density of the (transformed) background measure with respect
// to Lebesgue measure (or counting measure for the discrete families).
inline double background_density(const KernelSpec& s, const Point& p) {
  Point b = detail::pull_back(s, p);
  double base = 0.0;
  int lebesgue_dim = 1;
  switch (s.family) {
    case Family::HermiteN:
      base = std::exp(-b.x() * b.x()) / std::sqrt(sf::pi);
      break;
    case Family::LaguerreN: {
      const double bx = b.x();
      if (bx < 0.0 || (bx == 0.0 && s.nu > 0.0))
        base = 0.0;
      else if (bx == 0.0)
        base = s.nu == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
      else
        base = std::exp(s.nu * std::log(bx) - bx - sf::lgamma_fn(s.nu + 1.0));
      break;
    }
    case Family::RootA:
      base = 1.0 / (2.0 * sf::pi);
      break;
    case Family::RootB:
    case Family::RootC:
    case Family::RootD:
      base = 1.0 / sf::pi;
      break;
    case Family::Sinc:
    case Family::Airy:
    case Family::Bessel:
      base = 1.0;
      break;
    case Family::Euclidean:
      base = 1.0;
      lebesgue_dim = s.dim;
      break;
    case Family::GinibreA:
    case Family::GinibreC:
    case Family::GinibreD:
    case Family::GinibreType:
      base = std::exp(-std::norm(b.z())) / sf::pi;
      lebesgue_dim = 2;
      break;
    case Family::Heisenberg: {
      double n2 = 0.0;
      for (const auto& z : b.c) n2 += std::norm(z);
      base = std::exp(-n2) / std::pow(sf::pi, s.dim);
      lebesgue_dim = 2 * s.dim;
      break;
    }
    case Family::DiscreteHermite:
    case Family::DiscreteLaguerre:
      return 1.0;  // counting measure, transforms not defined here
  }
  // Jacobian of the pull-back chain.
  double jac = 1.0;
  Point cur = p;
  for (auto it = s.transforms.rbegin(); it != s.transforms.rend(); ++it) {
    switch (it->op) {
      case Transform::Op::Shift:
        for (auto& z : cur.c) z += it->value;
        break;
      case Transform::Op::Dilate:
        jac /= std::pow(it->value, lebesgue_dim);
        for (auto& z : cur.c) z /= it->value;
        break;
      case Transform::Op::SqrtMap:
        jac *= 2.0 * std::abs(cur.c[0].real());
        for (auto& z : cur.c) z *= z;
        break;
    }
  }
  return base * jac;
}

// Kernel conjugated into the Lebesgue gauge:
// sqrt(w(x)) K(x,x') sqrt(w(x')), with w the background density.
inline Complex lebesgue_kernel(const KernelSpec& s, const Point& x,
                               const Point& y) {
  return std::sqrt(background_density(s, x)) * eval_kernel(s, x, y) *
         std::sqrt(background_density(s, y));
}

// det_{j,k} K(x_j, x_k), n <= 12
inline double correlation_det(const KernelSpec& s, const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 1 || n > 12)
    throw std::invalid_argument("correlation_det: need 1..12 points");
  Eigen::MatrixXcd K(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Complex v = eval_kernel(s, pts[j], pts[k]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("correlation_det: non-finite kernel entry");
      K(j, k) = v;
    }
  const Complex d = K.determinant();
  if (std::abs(d.imag()) > 1e-10 * (1.0 + std::abs(d.real())))
    throw std::runtime_error("correlation_det: non-real determinant");
  return d.real();
}

inline KernelSpec transform_kernel(const KernelSpec& s, Transform t) {
  if (t.op == Transform::Op::Dilate && !(t.value > 0.0))
    throw std::invalid_argument("dilate: factor must be positive");
  if (t.op == Transform::Op::SqrtMap && s.domain() != Domain::HalfLine)
    throw std::invalid_argument("sqrt_map: only defined on the half-line");
  if (s.domain() == Domain::Naturals)
    throw std::invalid_argument("transforms undefined on discrete domains");
  KernelSpec out = s;
  out.transforms.push_back(t);
  return out;
}

inline KernelSpec shift(const KernelSpec& s, double u) {
  return transform_kernel(s, {Transform::Op::Shift, u});
}
inline KernelSpec dilate(const KernelSpec& s, double c) {
  return transform_kernel(s, {Transform::Op::Dilate, c});
}
inline KernelSpec sqrt_map(const KernelSpec& s) {
  return transform_kernel(s, {Transform::Op::SqrtMap, 0.0});
}

// ---------------------------------------------------------------------------
// Weyl denominator identities (trigonometric form), residual of
// |det side - product side| / (1 + |product side|).
// ---------------------------------------------------------------------------

inline double weyl_identity_residual(char type, const std::vector<Complex>& zeta) {
  const int N = static_cast<int>(zeta.size());
  if (N < 1 || N > 8)
    throw std::invalid_argument("weyl identity: need 1 <= N <= 8");
  const Complex I(0.0, 1.0);
  Eigen::MatrixXcd M(N, N);
  Complex prod = 1.0;
  auto pair_product = [&](Complex unit) {
    Complex p = unit;
    for (int j = 0; j < N; ++j)
      for (int k = j + 1; k < N; ++k)
        p *= std::sin(zeta[k] - zeta[j]) * std::sin(zeta[k] + zeta[j]);
    return p;
  };
  switch (type) {
    case 'A': {
      // cal N = N, J(j) = j - 1/2
      for (int j = 1; j <= N; ++j)
        for (int k = 0; k < N; ++k)
          M(j - 1, k) = std::exp(-I * ((N - 2.0 * (j - 0.5)) * zeta[k]));
      prod = std::pow(2.0 * I, N * (N - 1) / 2);
      for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) prod *= std::sin(zeta[k] - zeta[j]);
      break;
    }
    case 'B': {
      // cal N = 2N - 1, J(j) = j - 1
      for (int j = 1; j <= N; ++j)
        for (int k = 0; k < N; ++k)
          M(j - 1, k) = std::sin((2.0 * N - 1.0 - 2.0 * (j - 1.0)) * zeta[k]);
      prod = pair_product(std::pow(2.0, N * (N - 1)));
      for (int l = 0; l < N; ++l) prod *= std::sin(zeta[l]);
      break;
    }
    case 'C': {
      // cal N = 2(N+1), J(j) = j
      for (int j = 1; j <= N; ++j)
        for (int k = 0; k < N; ++k)
          M(j - 1, k) = std::sin((2.0 * (N + 1.0) - 2.0 * j) * zeta[k]);
      prod = pair_product(std::pow(2.0, N * (N - 1)));
      for (int l = 0; l < N; ++l) prod *= std::sin(2.0 * zeta[l]);
      break;
    }
    case 'D': {
      // cal N = 2(N-1), J(j) = j - 1
      for (int j = 1; j <= N; ++j)
        for (int k = 0; k < N; ++k)
          M(j - 1, k) = std::cos((2.0 * (N - 1.0) - 2.0 * (j - 1.0)) * zeta[k]);
      prod = pair_product(std::pow(2.0, (N - 1) * (N - 1)));
      break;
    }
    default:
      throw std::invalid_argument("weyl identity: type must be A, B, C, or D");
  }
  const Complex det = M.determinant();
  return std::abs(det - prod) / (1.0 + std::abs(prod));
}

// ---------------------------------------------------------------------------
// Scaling limits: sup-norm distance on a grid between the rescaled finite
// kernel (in the Lebesgue gauge) and its infinite limit kernel.
// ---------------------------------------------------------------------------

struct ScalingMode {
  enum class Kind { Bulk, SoftEdge, HardEdge, CircularBulk } kind;
  double nu = 0.0;   // hard edge
  char root = 'A';   // circular bulk
};

inline double scaling_limit_error(const ScalingMode& mode, int N, double lo,
                                  double hi, int grid) {
  if (N < 10) throw std::invalid_argument("scaling limit: N >= 10 required");
  std::vector<double> xs(grid);
  for (int i = 0; i < grid; ++i)
    xs[i] = lo + (hi - lo) * i / (grid - 1.0);

  KernelSpec fin = KernelSpec::sinc();  // overwritten below
  KernelSpec lim = KernelSpec::sinc();
  switch (mode.kind) {
    case ScalingMode::Kind::Bulk:
      fin = dilate(KernelSpec::hermite(N), std::sqrt(2.0 * N));
      lim = KernelSpec::sinc();
      break;
    case ScalingMode::Kind::SoftEdge:
      fin = dilate(shift(KernelSpec::hermite(N), std::sqrt(2.0 * N)),
                   std::sqrt(2.0) * std::pow(N, 1.0 / 6.0));
      lim = KernelSpec::airy();
      break;
    case ScalingMode::Kind::HardEdge:
      // positions map as x = sqrt(4N y); the dilation acts before the root
      fin = sqrt_map(dilate(KernelSpec::laguerre(N, mode.nu), 4.0 * N));
      lim = KernelSpec::bessel(mode.nu);
      break;
    case ScalingMode::Kind::CircularBulk:
      if (mode.root == 'A') {
        fin = dilate(KernelSpec::root('A', N), N / 2.0);
        lim = KernelSpec::sinc();
      } else {
        fin = dilate(KernelSpec::root(mode.root, N), static_cast<double>(N));
        lim = KernelSpec::bessel(mode.root == 'D' ? -0.5 : 0.5);
      }
      break;
  }

  double err = 0.0;
  for (double x : xs)
    for (double y : xs) {
      const double a = lebesgue_kernel(fin, Point(x), Point(y)).real();
      const double b = lebesgue_kernel(lim, Point(x), Point(y)).real();
      err = std::max(err, std::abs(a - b));
    }
  return err;
}

}  // namespace dpplab::kernels
