#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace wydlab::testing {

inline double rel_diff(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

/// Seeded generator of log-uniform positives and uniform reals.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

// Direct closed forms in long double; deliberately naive, valid away from
// the removable singularities.
inline long double naive_wyd(long double p, long double x, long double y) {
  return p * (1 - p) * (x - y) * (x - y) /
         ((std::pow(x, p) - std::pow(y, p)) * (std::pow(x, 1 - p) - std::pow(y, 1 - p)));
}
inline long double naive_log_mean(long double x, long double y) {
  return (x - y) / (std::log(x) - std::log(y));
}
inline long double naive_g_hat(long double p, long double x, long double y) {
  return p * std::pow(x * y, p / 2) * (x - y) / (std::pow(x, p) - std::pow(y, p));
}
inline long double naive_a_hat(long double p, long double x, long double y) {
  return p * (std::pow(x, p) + std::pow(y, p)) * (x - y) / (2 * (std::pow(x, p) - std::pow(y, p)));
}
inline long double naive_binomial(long double p, long double x, long double y) {
  return std::pow((std::pow(x, p) + std::pow(y, p)) / 2, 1 / p);
}
inline long double naive_specht(long double x) {
  const long double h = std::pow(x, 1 / (x - 1));
  return h / (std::exp(1.0L) * std::log(h));
}

}  // namespace wydlab::testing
