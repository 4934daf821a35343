#pragma once

#include <vector>

namespace wydlab {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
/// Exact for polynomials of degree <= 2n - 1. Requires n >= 1.
QuadratureRule gauss_legendre(int n);

/// The same rule mapped to [0, 1]; weights sum to 1.
QuadratureRule gauss_legendre_unit(int n);

}  // namespace wydlab
