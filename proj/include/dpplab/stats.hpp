#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dpplab::stats {

// Welford accumulator
class Accumulator {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / n_;
    m2_ += d * (x - mean_);
  }
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / (n_ - 1) : 0.0; }
  double stderror() const {
    return n_ > 1 ? std::sqrt(variance() / n_) : 0.0;
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct Histogram {
  double lo = 0.0, hi = 1.0;
  std::vector<double> counts;  // weighted counts per bin
  std::size_t samples = 0;     // number of contributing configurations

  Histogram(double lo_, double hi_, int bins) : lo(lo_), hi(hi_), counts(bins, 0.0) {}

  double width() const { return (hi - lo) / counts.size(); }

  void add(double x, double w = 1.0) {
    if (x < lo || x >= hi) return;
    const auto b = static_cast<std::size_t>((x - lo) / width());
    if (b < counts.size()) counts[b] += w;
  }

  double center(std::size_t b) const { return lo + (b + 0.5) * width(); }

  // density estimate per unit length, normalized by the sample count
  double density(std::size_t b) const {
    return counts[b] / (static_cast<double>(samples) * width());
  }
};

// Total variation distance between two pmfs over 0..n (padded with zeros).
inline double total_variation(const std::vector<double>& p,
                              const std::vector<double>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double tv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    tv += std::abs(a - b);
  }
  return 0.5 * tv;
}

// One-sample KS statistic against a cdf given as callable on sorted data.
template <typename Cdf>
double ks_statistic(std::vector<double> xs, Cdf&& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = cdf(xs[i]);
    d = std::max(d, std::abs((i + 1) / n - F));
    d = std::max(d, std::abs(F - i / n));
  }
  return d;
}

// Two-sample KS statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

// Critical value for the (one- or two-sample) KS test at level alpha:
// reject when D > ks_critical(alpha) * sqrt(1/n) (or sqrt((n+m)/(nm))).
inline double ks_critical(double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

}  // namespace dpplab::stats
