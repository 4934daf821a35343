#include "wydlab/mean_expr.hpp"

#include <cmath>

#include "wydlab/errors.hpp"
#include "wydlab/scalar_means.hpp"

namespace wydlab::engine {

namespace sc = wydlab::scalar;

std::string describe(const MeanExpr& expr) {
  switch (expr.tag) {
    case ExprTag::kZero: return "0";
    case ExprTag::kLogX: return "log(x)";
    case ExprTag::kA: return "A(x,1)";
    case ExprTag::kG: return "G(x,1)";
    case ExprTag::kH: return "H(x,1)";
    case ExprTag::kL: return "L(x,1)";
    case ExprTag::kWp: return "W_p(x,1)";
    case ExprTag::kWHalf: return "W_{1/2}(x,1)";
    case ExprTag::kBHalf: return "((sqrt(x)+1)/2)^2";
    case ExprTag::kGHat: return "Ghat_p(x,1)";
    case ExprTag::kAHat: return "Ahat_p(x,1)";
    case ExprTag::kK: return "K(x)";
    case ExprTag::kS: return "S(x)";
    case ExprTag::kLogK: return "log(K(x))";
    case ExprTag::kLSquared: return "L(x,1)^2";
    case ExprTag::kHermiteLower: return "4*L(x,1)^2/((x^p+1)(x^{1-p}+1))";
    case ExprTag::kHermiteUpper: return "x^{-1/2}*L(x,1)^2";
    case ExprTag::kRShiftedSqrt: return "r*(sqrt(x)-1)^2+sqrt(x)";
    case ExprTag::kRShiftedL: return "r*(sqrt(x)-1)^2+L(x,1)";
    case ExprTag::kDifferenceBound: return "p(1-p)*(sqrt(x)-1)^2+L(x,1)";
    case ExprTag::kSpechtTimesG: return "S(x)*G(x,1)";
    case ExprTag::kSpechtTimesL: return "S(x)*L(x,1)";
    case ExprTag::kKSqrtTimesSqrt: return "K(sqrt(x))*sqrt(x)";
    case ExprTag::kKSqrtTimesL: return "K(sqrt(x))*L(x,1)";
    case ExprTag::kSSqrtTimesSqrt: return "S(sqrt(x))*sqrt(x)";
    case ExprTag::kKPowTimesL: return "K(x)^{p(1-p)}*L(x,1)";
    case ExprTag::kKInvPowTimesW: return "K(x)^{-p(1-p)}*W_p(x,1)";
    case ExprTag::kRelLogGeoDefect: return "(L^2-G^2)/(2L^2)";
    case ExprTag::kRelArithDefect: return "(A-L)/L";
    case ExprTag::kLogKFormRatio: return "1-(x+1)log(x)/(2(x-1))+log(K(x))";
    case ExprTag::kLogKFormSquare: return "1-x*log(x)^2/(x-1)^2+2log(4x/(x+1)^2)";
    case ExprTag::kHarmonicCubedXp: return "H(x,x^p)^3";
    case ExprTag::kGeoSqArithXp: return "x^{p+1}*A(x,x^p)";
    case ExprTag::kLogCubedXp: return "L(x,x^p)^3";
    case ExprTag::kKOfXpTimesL: return "K(x^p)*L(x,1)";
    case ExprTag::kSOfXpTimesL: return "S(x^p)*L(x,1)";
    case ExprTag::kKOfXppTimesL: return "K(x^{p(1-p)})*L(x,1)";
    case ExprTag::kSPowTimesL: return "S(x)^{p(1-p)}*L(x,1)";
    case ExprTag::kTLogNeg: return "ln_{-p}(x)";
    case ExprTag::kTLogPos: return "ln_p(x)";
  }
  return "?";
}

bool depends_on_p(const MeanExpr& expr) {
  switch (expr.tag) {
    case ExprTag::kWp:
    case ExprTag::kGHat:
    case ExprTag::kAHat:
    case ExprTag::kHermiteLower:
    case ExprTag::kDifferenceBound:
    case ExprTag::kKPowTimesL:
    case ExprTag::kKInvPowTimesW:
    case ExprTag::kHarmonicCubedXp:
    case ExprTag::kGeoSqArithXp:
    case ExprTag::kLogCubedXp:
    case ExprTag::kKOfXpTimesL:
    case ExprTag::kSOfXpTimesL:
    case ExprTag::kKOfXppTimesL:
    case ExprTag::kSPowTimesL:
    case ExprTag::kTLogNeg:
    case ExprTag::kTLogPos:
      return true;
    default:
      return false;
  }
}

double evaluate(const MeanExpr& expr, double x, double p) {
  if (!std::isfinite(p)) throw DomainError("p must be finite");
  const sc::PositivePair pair(x, 1.0);
  const double q = p * (1.0 - p);

  switch (expr.tag) {
    case ExprTag::kZero: return 0.0;
    case ExprTag::kLogX: return std::log(x);
    case ExprTag::kA: return sc::arithmetic(pair);
    case ExprTag::kG: return sc::geometric(pair);
    case ExprTag::kH: return sc::harmonic(pair);
    case ExprTag::kL: return sc::logarithmic(pair);
    case ExprTag::kWp: return sc::wyd(p, pair);
    case ExprTag::kWHalf: return sc::wyd(0.5, pair);
    case ExprTag::kBHalf: return sc::binomial_mean(0.5, pair);
    case ExprTag::kGHat: return sc::g_hat(p, pair);
    case ExprTag::kAHat: return sc::a_hat(p, pair);
    case ExprTag::kK: return sc::kantorovich(x);
    case ExprTag::kS: return sc::specht(x);
    case ExprTag::kLogK: return std::log(sc::kantorovich(x));
    case ExprTag::kLSquared: {
      const double l = sc::logarithmic(pair);
      return l * l;
    }
    case ExprTag::kHermiteLower: {
      const double l = sc::logarithmic(pair);
      return 4.0 * l * l / ((std::pow(x, p) + 1.0) * (std::pow(x, 1.0 - p) + 1.0));
    }
    case ExprTag::kHermiteUpper: {
      const double l = sc::logarithmic(pair);
      return l * l / std::sqrt(x);
    }
    case ExprTag::kRShiftedSqrt: {
      const double d = std::sqrt(x) - 1.0;
      return expr.param * d * d + std::sqrt(x);
    }
    case ExprTag::kRShiftedL: {
      const double d = std::sqrt(x) - 1.0;
      return expr.param * d * d + sc::logarithmic(pair);
    }
    case ExprTag::kDifferenceBound: {
      const double d = std::sqrt(x) - 1.0;
      return q * d * d + sc::logarithmic(pair);
    }
    case ExprTag::kSpechtTimesG: return sc::specht(x) * sc::geometric(pair);
    case ExprTag::kSpechtTimesL: return sc::specht(x) * sc::logarithmic(pair);
    case ExprTag::kKSqrtTimesSqrt: {
      const double r = std::sqrt(x);
      return sc::kantorovich(r) * r;
    }
    case ExprTag::kKSqrtTimesL: return sc::kantorovich(std::sqrt(x)) * sc::logarithmic(pair);
    case ExprTag::kSSqrtTimesSqrt: {
      const double r = std::sqrt(x);
      return sc::specht(r) * r;
    }
    case ExprTag::kKPowTimesL:
      return std::pow(sc::kantorovich(x), q) * sc::logarithmic(pair);
    case ExprTag::kKInvPowTimesW:
      return std::pow(sc::kantorovich(x), -q) * sc::wyd(p, pair);
    case ExprTag::kRelLogGeoDefect: {
      const double ratio = sc::geometric(pair) / sc::logarithmic(pair);
      return 0.5 * (1.0 - ratio * ratio);
    }
    case ExprTag::kRelArithDefect: {
      const double l = sc::logarithmic(pair);
      return (sc::arithmetic(pair) - l) / l;
    }
    // (x+1) log x / (2(x-1)) = A/L and x (log x)^2/(x-1)^2 = (G/L)^2, which
    // keeps both forms finite at x = 1.
    case ExprTag::kLogKFormRatio:
      return 1.0 - sc::arithmetic(pair) / sc::logarithmic(pair) +
             std::log(sc::kantorovich(x));
    case ExprTag::kLogKFormSquare: {
      const double ratio = sc::geometric(pair) / sc::logarithmic(pair);
      return 1.0 - ratio * ratio - 2.0 * std::log(sc::kantorovich(x));
    }
    case ExprTag::kHarmonicCubedXp: {
      const double h = sc::harmonic(sc::PositivePair(x, std::pow(x, p)));
      return h * h * h;
    }
    case ExprTag::kGeoSqArithXp:
      return std::pow(x, p + 1.0) * sc::arithmetic(sc::PositivePair(x, std::pow(x, p)));
    case ExprTag::kLogCubedXp: {
      const double l = sc::logarithmic(sc::PositivePair(x, std::pow(x, p)));
      return l * l * l;
    }
    case ExprTag::kKOfXpTimesL:
      return sc::kantorovich(std::pow(x, p)) * sc::logarithmic(pair);
    case ExprTag::kSOfXpTimesL:
      return sc::specht(std::pow(x, p)) * sc::logarithmic(pair);
    case ExprTag::kKOfXppTimesL:
      return sc::kantorovich(std::pow(x, q)) * sc::logarithmic(pair);
    case ExprTag::kSPowTimesL:
      return std::pow(sc::specht(x), q) * sc::logarithmic(pair);
    case ExprTag::kTLogNeg: return sc::t_logarithm(-p, x);
    case ExprTag::kTLogPos: return sc::t_logarithm(p, x);
  }
  throw DomainError("unknown expression tag");
}

}  // namespace wydlab::engine
