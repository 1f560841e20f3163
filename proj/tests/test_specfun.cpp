#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "dpplab/quadrature.hpp"
#include "dpplab/specfun.hpp"

using namespace dpplab;
namespace sf = dpplab::specfun;

namespace {

// Oracle: Hermite polynomial from its finite sum,
// H_n(x) = n! sum_k (-1)^k (2x)^(n-2k) / (k! (n-2k)!).
double hermite_series(int n, double x) {
  double s = 0.0;
  for (int k = 0; 2 * k <= n; ++k) {
    double t = (k % 2 ? -1.0 : 1.0) * std::pow(2.0 * x, n - 2 * k);
    t *= std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - 2.0 * k + 1.0));
    s += t;
  }
  return s;
}

// Oracle: Laguerre polynomial from its finite sum,
// L_n^(nu)(x) = sum_k (nu+k+1)_{n-k} / ((n-k)! k!) (-x)^k.
// Also reports the sum of term magnitudes so callers can bound the
// cancellation error of the oracle itself.
double laguerre_series(int n, double nu, double x, double* scale = nullptr) {
  double s = 0.0, mag = 0.0;
  for (int k = 0; k <= n; ++k) {
    double poch = 1.0;  // (nu+k+1)_{n-k}
    for (int j = 0; j < n - k; ++j) poch *= nu + k + 1.0 + j;
    const double t =
        poch / (std::exp(std::lgamma(n - k + 1.0) + std::lgamma(k + 1.0))) *
        std::pow(-x, k);
    s += t;
    mag += std::abs(t);
  }
  if (scale) *scale = mag;
  return s;
}

// Oracle: Airy function by quadrature of the rotated cosine-integral
// representation.  Rotating k -> e^{i pi/6} s makes the integrand decay like
// exp(-s^3/3), so straightforward panel quadrature converges.
std::complex<double> airy_contour(double x) {
  const std::complex<double> rot = std::polar(1.0, sf::pi / 6.0);
  const std::complex<double> phase = std::polar(1.0, 2.0 * sf::pi / 3.0);
  const auto& r = quad::gauss_legendre(60);
  std::complex<double> sum = 0.0;
  const double upper = 14.0;
  const int panels = 28;
  const double h = upper / panels;
  for (int p = 0; p < panels; ++p) {
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      const double s = p * h + 0.5 * h * (r.x[i] + 1.0);
      sum += 0.5 * h * r.w[i] * std::exp(-s * s * s / 3.0 + x * s * phase);
    }
  }
  return rot * sum / sf::pi;
}

double airy_oracle(double x) { return airy_contour(x).real(); }

double airy_prime_oracle(double x) {
  const std::complex<double> rot = std::polar(1.0, sf::pi / 6.0);
  const std::complex<double> phase = std::polar(1.0, 2.0 * sf::pi / 3.0);
  const auto& r = quad::gauss_legendre(60);
  std::complex<double> sum = 0.0;
  const double upper = 14.0;
  const int panels = 28;
  const double h = upper / panels;
  for (int p = 0; p < panels; ++p) {
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      const double s = p * h + 0.5 * h * (r.x[i] + 1.0);
      sum += 0.5 * h * r.w[i] * s * phase *
             std::exp(-s * s * s / 3.0 + x * s * phase);
    }
  }
  return (rot * sum / sf::pi).real();
}

// Oracle: Bessel J from the integral representation
// J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
//         - sin(nu pi)/pi int_0^inf exp(-nu t - x sinh t) dt.
double bessel_j_integral(double nu, double x) {
  const double osc = quad::integrate(
      [nu, x](double t) { return std::cos(nu * t - x * std::sin(t)); }, 0.0,
      sf::pi, 50, 24);
  double tail = 0.0;
  if (std::abs(std::sin(nu * sf::pi)) > 1e-300) {
    tail = quad::integrate(
        [nu, x](double t) { return std::exp(-nu * t - x * std::sinh(t)); },
        0.0, 25.0, 50, 40);
  }
  return (osc - std::sin(nu * sf::pi) * tail) / sf::pi;
}

}  // namespace

TEST_CASE("gamma function against std::tgamma") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 25.5, 49.5}) {
    REQUIRE(sf::gamma_fn(x) == Catch::Approx(std::tgamma(x)).epsilon(1e-12));
    REQUIRE(sf::lgamma_fn(x) == Catch::Approx(std::lgamma(x)).margin(1e-12));
  }
}

TEST_CASE("hermite values from the series definition") {
  CHECK(sf::hermite(0, 3.7) == 1.0);
  CHECK(sf::hermite(1, 2.0) == Catch::Approx(4.0));
  CHECK(sf::hermite(3, 1.0) == Catch::Approx(-4.0));
  for (int n : {2, 5, 9, 12}) {
    for (double x : {-3.0, -0.4, 0.0, 1.3, 4.0}) {
      REQUIRE(sf::hermite(n, x) ==
              Catch::Approx(hermite_series(n, x)).epsilon(1e-11).margin(1e-11));
    }
  }
}

TEST_CASE("three-term consistency of Hermite recurrence vs series") {
  // H_{n+1}(x) = 2x H_n(x) - 2n H_{n-1}(x), checked against the series up to
  // the degree where the factorial sum is still well conditioned.
  for (int n = 1; n <= 30; ++n) {
    for (double x : {-10.0, -2.5, 0.7, 10.0}) {
      const double lhs = sf::hermite(n + 1, x);
      const double rhs = 2.0 * x * sf::hermite(n, x) - 2.0 * n * sf::hermite(n - 1, x);
      REQUIRE(lhs == Catch::Approx(rhs).epsilon(1e-10).margin(1e-280));
      if (n <= 12)
        REQUIRE(lhs == Catch::Approx(hermite_series(n + 1, x)).epsilon(1e-9).margin(1e-9));
    }
  }
}

TEST_CASE("laguerre values from the series definition") {
  CHECK(sf::laguerre(0, 0.5, 9.0) == 1.0);
  CHECK(sf::laguerre(1, 0.0, 2.0) == Catch::Approx(-1.0));
  CHECK(sf::laguerre(2, 0.0, 0.0) == Catch::Approx(1.0));
  CHECK_THROWS_AS(sf::laguerre(2, -1.5, 1.0), std::invalid_argument);
  for (int n : {1, 3, 7, 11}) {
    for (double nu : {-0.5, 0.0, 2.0}) {
      for (double x : {0.0, 0.8, 5.0, 12.0}) {
        double scale = 0.0;
        const double ref = laguerre_series(n, nu, x, &scale);
        // the oracle's own cancellation bounds the achievable agreement
        const double tol = std::max(1e-12 * scale, 1e-12);
        REQUIRE(std::abs(sf::laguerre(n, nu, x) - ref) < tol);
      }
    }
  }
}

TEST_CASE("normalized polynomials") {
  CHECK(sf::phi_normalized(sf::PolyFamily::hermite(0), 0.33) == 1.0);
  CHECK(sf::phi_normalized(sf::PolyFamily::hermite(2), 0.0) ==
        Catch::Approx(-2.0 / std::sqrt(8.0)));
  CHECK(sf::phi_normalized(sf::PolyFamily::laguerre(1, 0.0), 0.0) ==
        Catch::Approx(1.0));
  // against the raw polynomial with explicit normalization
  for (int n : {3, 8, 17}) {
    const double x = 1.37;
    REQUIRE(sf::phi_hermite(n, x) ==
            Catch::Approx(sf::hermite(n, x) /
                          std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0))));
    const double nu = 0.7;
    REQUIRE(sf::phi_laguerre(n, nu, x) ==
            Catch::Approx(sf::laguerre(n, nu, x) *
                          std::sqrt(std::tgamma(n + 1.0) * std::tgamma(nu + 1.0) /
                                    std::tgamma(n + nu + 1.0))));
  }
}

TEST_CASE("orthonormality by quadrature") {
  // composite 200-point rules over the effective support of the weights
  for (int n = 0; n <= 20; n += 4) {
    for (int m = n; m <= 20; m += 5) {
      const double U = std::sqrt(2.0 * 21.0) + 12.0;
      const double s = quad::integrate(
          [n, m](double x) {
            return sf::phi_hermite(n, x) * sf::phi_hermite(m, x) *
                   std::exp(-x * x) / std::sqrt(sf::pi);
          },
          -U, U, 50, 8);
      REQUIRE(s == Catch::Approx(n == m ? 1.0 : 0.0).margin(1e-8));
    }
  }
  for (double nu : {-0.5, 0.0, 2.0}) {
    const double lg = sf::lgamma_fn(nu + 1.0);
    for (int n = 0; n <= 20; n += 5) {
      for (int m = n; m <= 20; m += 7) {
        // substitute x = u^2 so the x^nu endpoint singularity disappears
        const double U = std::sqrt(4.0 * 21.0 + 2.0 * std::abs(nu) + 40.0);
        const double s = quad::integrate(
            [n, m, nu, lg](double u) {
              const double x = u * u;
              return sf::phi_laguerre(n, nu, x) * sf::phi_laguerre(m, nu, x) *
                     2.0 * std::exp((2.0 * nu + 1.0) * std::log(u) - x - lg);
            },
            0.0, U, 50, 12);
        REQUIRE(s == Catch::Approx(n == m ? 1.0 : 0.0).margin(1e-8));
      }
    }
  }
}

TEST_CASE("bessel J half-integer closed forms") {
  for (double x = 0.1; x <= 40.0; x += 0.7) {
    const double ref_p = std::sqrt(2.0 / (sf::pi * x)) * std::sin(x);
    const double ref_m = std::sqrt(2.0 / (sf::pi * x)) * std::cos(x);
    REQUIRE(std::abs(sf::bessel_j(0.5, x) - ref_p) < 1e-10);
    REQUIRE(std::abs(sf::bessel_j(-0.5, x) - ref_m) < 1e-10);
  }
  CHECK(std::abs(sf::bessel_j(0.5, sf::pi)) < 1e-12);
  CHECK(sf::bessel_j(0.5, sf::pi / 2.0) == Catch::Approx(2.0 / sf::pi).epsilon(1e-10));
}

TEST_CASE("bessel series/asymptotic seam consistency") {
  // evaluate both branches near the crossover and compare
  for (double nu : {0.0, 0.3, 1.0, 2.5, 3.5}) {
    const double seam = sf::detail::bessel_seam(nu);
    for (double dx : {-0.5, -0.1, 0.1, 0.5}) {
      const double x = seam + dx;
      const double js = sf::detail::bessel_j_series(nu, x);
      const double ja = sf::detail::bessel_j_asymptotic(nu, x);
      REQUIRE(js == Catch::Approx(ja).epsilon(5e-11).margin(5e-11));
      const double is = sf::detail::bessel_i_series(nu, x);
      const double ia = sf::detail::bessel_i_asymptotic(nu, x);
      REQUIRE(is == Catch::Approx(ia).epsilon(5e-11));
    }
  }
}

TEST_CASE("bessel J against the integral-representation oracle") {
  for (double nu : {0.0, 0.3, 1.0, 2.5, 3.5}) {
    for (double x = 0.5; x <= 50.0; x += 2.48) {
      const double ref = bessel_j_integral(nu, x);
      REQUIRE(std::abs(sf::bessel_j(nu, x) - ref) <
              1e-10 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("bessel I at the origin and against the series") {
  CHECK(sf::bessel_i(0.0, 0.0) == 1.0);
  CHECK(sf::bessel_i(1.5, 0.0) == 0.0);
  CHECK_THROWS_AS(sf::bessel_j(0.0, -1.0), std::invalid_argument);
  // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
  for (double x : {0.5, 2.0, 8.0, 20.0, 45.0}) {
    const double ref = std::sqrt(2.0 / (sf::pi * x)) * std::sinh(x);
    REQUIRE(sf::bessel_i(0.5, x) == Catch::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("airy function against the contour-integral oracle") {
  CHECK(sf::airy(0.0) == Catch::Approx(0.3550280538878172).epsilon(1e-12));
  CHECK(sf::airy_prime(0.0) == Catch::Approx(-0.2588194037928068).epsilon(1e-12));
  CHECK(std::abs(sf::airy(10.0)) < 1e-9);
  for (double x = -10.0; x <= 10.0; x += 0.5) {
    REQUIRE(std::abs(sf::airy(x) - airy_oracle(x)) < 1e-8);
    REQUIRE(std::abs(sf::airy_prime(x) - airy_prime_oracle(x)) < 1e-8);
  }
  // seam continuity
  for (double x : {-6.0, 6.0}) {
    REQUIRE(std::abs(sf::airy(x - 1e-9) - sf::airy(x + 1e-9)) < 1e-8);
  }
}
