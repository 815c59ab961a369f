#pragma once

#include <cmath>
#include <vector>

namespace caydis {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/** 95% Wilson score interval for a binomial proportion. */
inline WilsonInterval wilson95(long long successes, long long trials) {
  if (trials <= 0) return WilsonInterval{0.0, 1.0};
  const double z = 1.959963984540054;
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double margin =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return WilsonInterval{std::max(0.0, center - margin), std::min(1.0, center + margin)};
}

/** Standard error of an empirical proportion, sqrt(p(1-p)/n). */
inline double proportion_se(long long successes, long long trials) {
  if (trials <= 0) return 0.0;
  double phat = static_cast<double>(successes) / static_cast<double>(trials);
  return std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
}

inline double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

/** Standard error of the mean (sample standard deviation / sqrt(n)). */
inline double mean_se(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  double var = ss / static_cast<double>(xs.size() - 1);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace caydis
