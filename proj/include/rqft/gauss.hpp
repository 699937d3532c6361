#pragma once

#include <cstddef>
#include <vector>

namespace rqft {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule of order n (cached; thread-safe).
const GaussRule& gauss_legendre(int n);

// Nodes/weights mapped to [a, b].
void gauss_legendre_on(int n, double a, double b, std::vector<double>& x,
                       std::vector<double>& w);

}  // namespace rqft
