#pragma once

// Small numeric helpers shared across modules.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace netgof {

inline double mean(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Sample standard deviation (n-1 denominator).
inline double stddev(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("stddev: need at least 2 values");
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

inline double expit(double x) {
  // Evaluated from the side that avoids overflow.
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double logit(double p) {
  if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("logit: p must lie in (0,1)");
  return std::log(p / (1.0 - p));
}

// One-sample Kolmogorov-Smirnov distance between a sample and a reference
// CDF evaluated by `cdf`.  The sample is copied and sorted.
template <class Cdf>
double ks_distance(std::vector<double> sample, Cdf&& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                             f - static_cast<double>(i) / n));
  }
  return d;
}

// Standard error of an empirical proportion r over n trials.
inline double proportion_se(double r, std::size_t n) {
  if (n == 0) throw std::invalid_argument("proportion_se: n must be positive");
  return std::sqrt(r * (1.0 - r) / static_cast<double>(n));
}

}  // namespace netgof
