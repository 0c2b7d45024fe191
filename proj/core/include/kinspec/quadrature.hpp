#pragma once

#include <vector>

namespace kinspec {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with `points` nodes mapped to [a, b].
QuadratureRule gauss_legendre(int points, double a = -1.0, double b = 1.0);

}  // namespace kinspec
