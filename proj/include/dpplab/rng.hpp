#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace dpplab::rng {

// Counter-based generator: every variate is a pure function of its key words.
// Replicas, steps, and particles can be evaluated in any order (or in
// parallel) and still produce bit-identical streams.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2) + b));
}

inline std::uint64_t key4(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  return mix(mix(mix(seed, a), b), c);
}

// uniform in (0,1); never returns 0 or 1
inline double u01(std::uint64_t h) {
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                      std::uint64_t c) {
  return u01(key4(seed, a, b, c));
}

// One standard normal keyed by (seed, replica, step, particle), Box-Muller.
inline double gauss(std::uint64_t seed, std::uint64_t replica,
                    std::uint64_t step, std::uint64_t particle) {
  const std::uint64_t k = key4(seed, replica, step, particle);
  const double u1 = u01(k);
  const double u2 = u01(splitmix64(k ^ 0xdeadbeefcafef00dULL));
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Sequential stream for consumers that need an open-ended number of draws
// (matrix fills, rejection samplers).  Still fully determined by the key.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index)
      : state_(key4(seed, tag, index, 0x5eedULL)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64(state_ ^ counter_++);
  }

  double uniform() { return u01(next_u64()); }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Poisson: inversion for small mean, Hormann's PTRD otherwise (exact).
  long poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 10.0) {
      const double L = std::exp(-mean);
      long k = 0;
      double p = uniform();
      while (p > L) {
        ++k;
        p *= uniform();
      }
      return k;
    }
    return poisson_ptrd(mean);
  }

  // Gamma(shape, scale): Marsaglia-Tsang, boosted for shape < 1 (exact).
  double gamma(double shape, double scale) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = gauss();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
  }

 private:
  long poisson_ptrd(double mu) {
    const double smu = std::sqrt(mu);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      double u = uniform() - 0.5;
      double v = uniform();
      double us = 0.5 - std::abs(u);
      long k = static_cast<long>(std::floor((2.0 * a / us + b) * u + mu + 0.43));
      if (us >= 0.07 && v <= v_r) return k;
      if (k < 0 || (us < 0.013 && v > us)) continue;
      const double lmu = std::log(mu);
      if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
          k * lmu - mu - std::lgamma(static_cast<double>(k) + 1.0)) {
        return k;
      }
    }
  }

  std::uint64_t state_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace dpplab::rng
