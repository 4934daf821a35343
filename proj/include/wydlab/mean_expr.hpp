#pragma once

#include <string>

namespace wydlab::engine {

/// Named scalar expressions of (x, p), all taken at the reduced pair (x, 1).
/// Composite entries spell out the products and sums the catalog needs.
enum class ExprTag {
  kZero,
  kLogX,                // log x
  kA,                   // A(x,1)
  kG,                   // G(x,1)
  kH,                   // H(x,1)
  kL,                   // L(x,1)
  kWp,                  // W_p(x,1)
  kWHalf,               // W_{1/2}(x,1)
  kBHalf,               // B_{1/2}(x,1) = ((sqrt x + 1)/2)^2
  kGHat,                // G_hat_p(x,1)
  kAHat,                // A_hat_p(x,1)
  kK,                   // K(x)
  kS,                   // S(x)
  kLogK,                // log K(x)
  kLSquared,            // L(x,1)^2
  kHermiteLower,        // 4 L^2 / ((x^p+1)(x^{1-p}+1))
  kHermiteUpper,        // x^{-1/2} L^2
  kRShiftedSqrt,        // r (sqrt x - 1)^2 + sqrt x          (param = r)
  kRShiftedL,           // r (sqrt x - 1)^2 + L               (param = r)
  kDifferenceBound,     // p(1-p)(sqrt x - 1)^2 + L
  kSpechtTimesG,        // S(x) G
  kSpechtTimesL,        // S(x) L
  kKSqrtTimesSqrt,      // K(sqrt x) sqrt x
  kKSqrtTimesL,         // K(sqrt x) L
  kSSqrtTimesSqrt,      // S(sqrt x) sqrt x
  kKPowTimesL,          // K(x)^{p(1-p)} L
  kKInvPowTimesW,       // K(x)^{-p(1-p)} W_p
  kRelLogGeoDefect,     // (L^2 - G^2) / (2 L^2)
  kRelArithDefect,      // (A - L) / L
  kLogKFormRatio,       // 1 - (x+1) log x / (2(x-1)) + log K(x)
  kLogKFormSquare,      // 1 - x (log x)^2 / (x-1)^2 + 2 log(4x / (x+1)^2)
  kHarmonicCubedXp,     // H(x, x^p)^3
  kGeoSqArithXp,        // x^{p+1} A(x, x^p)
  kLogCubedXp,          // L(x, x^p)^3
  kKOfXpTimesL,         // K(x^p) L
  kSOfXpTimesL,         // S(x^p) L
  kKOfXppTimesL,        // K(x^{p(1-p)}) L
  kSPowTimesL,          // S(x)^{p(1-p)} L
  kTLogNeg,             // ln_{-p} x
  kTLogPos,             // ln_p x
};

/// A symbolic expression: a tag plus the one numeric parameter some tags
/// carry (the shift r of the r-chain).
struct MeanExpr {
  ExprTag tag = ExprTag::kZero;
  double param = 0.0;
};

/// Human-readable formula, e.g. "K(x)^{p(1-p)}*L(x,1)".
std::string describe(const MeanExpr& expr);

/// Whether the value depends on p at all.
bool depends_on_p(const MeanExpr& expr);

/// Evaluates at (x, p). Throws DomainError for x <= 0 or non-finite input.
/// All formulas are delegated to wydlab::scalar.
double evaluate(const MeanExpr& expr, double x, double p);

}  // namespace wydlab::engine
