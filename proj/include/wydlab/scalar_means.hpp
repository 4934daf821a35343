#pragma once

// Scalar symmetric homogeneous means, the Wigner-Yanase-Dyson function and
// the Kantorovich / Specht constants.
//
// Every function is pure and thread-safe. Removable singularities (x = y,
// p in {0, 1}, x = 1) are evaluated through their continuous extensions to
// full binary64 precision; no caller needs to special-case them.

namespace wydlab::scalar {

/// An ordered pair of finite, strictly positive reals.
class PositivePair {
 public:
  /// Throws DomainError if either argument is non-finite or <= 0.
  PositivePair(double x, double y);

  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] double y() const noexcept { return y_; }

 private:
  double x_;
  double y_;
};

enum class ClassicalMean { kArithmetic, kGeometric, kHarmonic, kLogarithmic };

/// A, G, H or L. L(x, x) = x.
double classical_mean(ClassicalMean kind, const PositivePair& pair);

double arithmetic(const PositivePair& pair);
double geometric(const PositivePair& pair);
double harmonic(const PositivePair& pair);
double logarithmic(const PositivePair& pair);

/// Tsallis t-logarithm (x^t - 1) / t, equal to log x at t = 0.
double t_logarithm(double t, double x);

/// Wigner-Yanase-Dyson function
///   W_p(x, y) = p(1-p)(x-y)^2 / ((x^p - y^p)(x^{1-p} - y^{1-p})),
/// extended by W_p(x, x) = x and W_0 = W_1 = L. Defined for every finite p.
double wyd(double p, const PositivePair& pair);

/// Power (binomial) mean ((x^p + y^p) / 2)^{1/p}; B_0 = G.
double binomial_mean(double p, const PositivePair& pair);

/// p (xy)^{p/2} (x - y) / (x^p - y^p); G_hat_0 = L, G_hat_1 = G.
double g_hat(double p, const PositivePair& pair);

/// p (x^p + y^p)(x - y) / (2 (x^p - y^p)); A_hat_0 = L, A_hat_1 = A.
double a_hat(double p, const PositivePair& pair);

/// Heinz mean (x^p y^{1-p} + x^{1-p} y^p) / 2.
double heinz_scalar(double p, const PositivePair& pair);

/// Kantorovich constant (x + 1)^2 / (4x).
double kantorovich(double x);

/// Specht ratio x^{1/(x-1)} / (e log x^{1/(x-1)}), with S(1) = 1.
double specht(double x);

/// max over [alpha, beta] of K(x)^{p(1-p)}. K is unimodal with its minimum
/// at 1, so the maximum sits at an endpoint. Requires 0 < alpha <= beta and
/// 0 <= p <= 1.
double kp_bound(double alpha, double beta, double p);

/// log( K(x)^{p(1-p)} G_hat_p(x,1) / W_p(x,1) )
///   = (p/2) log x + p(1-p) (2 log(x+1) - log 4x) - log(1-p) - log(x-1)
///     + log(x^{1-p} - 1).
/// Its sign decides the order between G_hat_p and K^{-p(1-p)} W_p.
/// Requires x > 1; p may be any finite value (the log(1-p) and
/// log(x^{1-p}-1) terms are combined, so p >= 1 is also well defined).
double ghat_kwyd_log_ratio(double p, double x);

}  // namespace wydlab::scalar
