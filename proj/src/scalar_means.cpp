#include "wydlab/scalar_means.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wydlab/errors.hpp"

namespace wydlab::scalar {
namespace {

// Below this magnitude the analytic limit (plus its leading correction) is
// used instead of the difference quotient.
constexpr double kSeriesThreshold = 1e-8;
// |x - y| below this fraction of max(x, y) is treated as the diagonal x = y.
constexpr double kNearEqual = 1e-12;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and > 0, got " +
                      std::to_string(v));
  }
}

// sinh(z) / z
double sinhc(double z) {
  if (std::abs(z) < kSeriesThreshold) return 1.0 + z * z / 6.0;
  return std::sinh(z) / z;
}

// z / tanh(z)
double z_coth(double z) {
  if (std::abs(z) < kSeriesThreshold) return 1.0 + z * z / 3.0;
  return z / std::tanh(z);
}

double log_cosh(double z) {
  const double a = std::abs(z);
  if (a < 1.0) {
    const double s = std::sinh(0.5 * a);
    return std::log1p(2.0 * s * s);
  }
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

// log(hi / lo) for hi >= lo > 0, accurate when the ratio is close to 1.
double log_ratio(double hi, double lo) {
  if (hi <= 2.0 * lo) return std::log1p((hi - lo) / lo);
  const double r = hi / lo;
  if (std::isfinite(r)) return std::log(r);
  return std::log(hi) - std::log(lo);
}

// The pair sorted as hi >= lo together with ell = log(hi / lo) >= 0.
// Sorting first makes every mean bit-symmetric in its arguments.
struct Sorted {
  double hi;
  double lo;
  double ell;
  bool diagonal;
};

Sorted sorted(const PositivePair& pair) {
  const double hi = std::max(pair.x(), pair.y());
  const double lo = std::min(pair.x(), pair.y());
  const bool diagonal = (hi - lo) <= kNearEqual * hi;
  return {hi, lo, diagonal ? 0.0 : log_ratio(hi, lo), diagonal};
}

double diagonal_value(const Sorted& s) { return s.lo + 0.5 * (s.hi - s.lo); }

double geometric_sorted(const Sorted& s) {
  if (s.hi == s.lo) return s.hi;
  return std::sqrt(s.hi) * std::sqrt(s.lo);
}

double log_mean_sorted(const Sorted& s) {
  if (s.diagonal) return diagonal_value(s);
  return (s.hi - s.lo) / s.ell;
}

}  // namespace

PositivePair::PositivePair(double x, double y) : x_(x), y_(y) {
  require_positive(x, "x");
  require_positive(y, "y");
}

double arithmetic(const PositivePair& pair) {
  if (pair.x() == pair.y()) return pair.x();
  return 0.5 * pair.x() + 0.5 * pair.y();
}

double geometric(const PositivePair& pair) { return geometric_sorted(sorted(pair)); }

double harmonic(const PositivePair& pair) {
  const double x = pair.x();
  const double y = pair.y();
  if (x == y) return x;
  return 2.0 * x * (y / (x + y));
}

double logarithmic(const PositivePair& pair) { return log_mean_sorted(sorted(pair)); }

double classical_mean(ClassicalMean kind, const PositivePair& pair) {
  switch (kind) {
    case ClassicalMean::kArithmetic:
      return arithmetic(pair);
    case ClassicalMean::kGeometric:
      return geometric(pair);
    case ClassicalMean::kHarmonic:
      return harmonic(pair);
    case ClassicalMean::kLogarithmic:
      return logarithmic(pair);
  }
  throw DomainError("unknown classical mean");
}

double t_logarithm(double t, double x) {
  require_finite(t, "t");
  require_positive(x, "x");
  const double lx = std::log(x);
  const double z = t * lx;
  if (std::abs(t) < kSeriesThreshold) return lx * (1.0 + z / 2.0 + z * z / 6.0);
  return std::expm1(z) / t;
}

// With ell = log(x/y), x^t - y^t = (xy)^{t/2} * 2 sinh(t ell / 2), so
//   psi(t) := (x^t - y^t)/t = (xy)^{t/2} ell sinhc(t ell / 2)
// and every quotient below reduces to L, G and sinhc/coth factors that are
// smooth in p.
double wyd(double p, const PositivePair& pair) {
  require_finite(p, "p");
  const Sorted s = sorted(pair);
  if (s.diagonal) return diagonal_value(s);
  const double l = log_mean_sorted(s);
  const double g = geometric_sorted(s);
  if (p == 0.0 || p == 1.0) return l;
  const double half = 0.5 * s.ell;
  return (l / g) * l / (sinhc(p * half) * sinhc((1.0 - p) * half));
}

double binomial_mean(double p, const PositivePair& pair) {
  require_finite(p, "p");
  const Sorted s = sorted(pair);
  if (s.hi == s.lo) return s.hi;
  const double g = geometric_sorted(s);
  const double d = 0.5 * s.ell;
  // log B_p = log G + log cosh(p d) / p
  if (std::abs(p) < kSeriesThreshold) return g * std::exp(0.5 * p * d * d);
  return g * std::exp(log_cosh(p * d) / p);
}

double g_hat(double p, const PositivePair& pair) {
  require_finite(p, "p");
  const Sorted s = sorted(pair);
  if (s.diagonal) return diagonal_value(s);
  return log_mean_sorted(s) / sinhc(0.5 * p * s.ell);
}

double a_hat(double p, const PositivePair& pair) {
  require_finite(p, "p");
  const Sorted s = sorted(pair);
  if (s.diagonal) return diagonal_value(s);
  return log_mean_sorted(s) * z_coth(0.5 * p * s.ell);
}

double heinz_scalar(double p, const PositivePair& pair) {
  require_finite(p, "p");
  const Sorted s = sorted(pair);
  if (s.hi == s.lo) return s.hi;
  return geometric_sorted(s) * std::cosh((p - 0.5) * s.ell);
}

double kantorovich(double x) {
  require_positive(x, "x");
  const double a = 0.5 * (x + 1.0);
  return a * (a / x);
}

double specht(double x) {
  require_positive(x, "x");
  // h = log(x) / (x - 1) = 1 / L(x, 1);  S = exp(h - 1) / h.
  const double u = x - 1.0;
  double h = 1.0;
  if (std::abs(u) < kNearEqual) {
    h = 1.0 - 0.5 * u;
  } else if (std::abs(u) < 0.5) {
    h = std::log1p(u) / u;
  } else {
    h = std::log(x) / u;
  }
  const double d = h - 1.0;
  // exp(d) >= 1 + d, so the exponent is non-negative.
  const double e = std::abs(d) < 0.5 ? d - std::log1p(d) : d - std::log(h);
  return std::exp(std::max(0.0, e));
}

double kp_bound(double alpha, double beta, double p) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  if (alpha > beta) throw DomainError("kp_bound requires alpha <= beta");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("kp_bound requires 0 <= p <= 1");
  const double k = std::max(kantorovich(alpha), kantorovich(beta));
  return std::pow(k, p * (1.0 - p));
}

double ghat_kwyd_log_ratio(double p, double x) {
  require_finite(p, "p");
  require_finite(x, "x");
  if (!(x > 1.0)) throw DomainError("ghat_kwyd_log_ratio requires x > 1");
  // -log(1-p) - log(x-1) + log(x^{1-p}-1) = log( ln_{1-p}(x) / (x-1) )
  const double tail = std::log(t_logarithm(1.0 - p, x) / (x - 1.0));
  return 0.5 * p * std::log(x) + p * (1.0 - p) * std::log(kantorovich(x)) + tail;
}

}  // namespace wydlab::scalar
