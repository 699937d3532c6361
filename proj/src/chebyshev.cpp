#include "rqft/chebyshev.hpp"

#include <cmath>
#include <numbers>

namespace rqft {

ChebyshevInterpolant::ChebyshevInterpolant(
    const std::function<double(double)>& f, double a, double b, int max_degree,
    double tail_tol)
    : a_(a), b_(b) {
  const int n = max_degree + 1;
  std::vector<double> fv(n);
  for (int k = 0; k < n; ++k) {
    const double theta = std::numbers::pi * (k + 0.5) / n;
    const double x = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(theta);
    fv[k] = f(x);
  }
  coeff_.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k)
      s += fv[k] * std::cos(std::numbers::pi * j * (k + 0.5) / n);
    coeff_[j] = 2.0 * s / n;
  }
  coeff_[0] *= 0.5;
  // Drop a negligible tail (keeps Clenshaw cheap for heavily oversampled fits).
  int keep = n;
  while (keep > 8) {
    double tail = 0.0;
    for (int j = keep - 4; j < keep; ++j) tail += std::abs(coeff_[j]);
    if (tail > tail_tol) break;
    keep -= 4;
  }
  coeff_.resize(keep);
}

double ChebyshevInterpolant::operator()(double x) const {
  const double t = (2.0 * x - (a_ + b_)) / (b_ - a_);
  double b1 = 0.0, b2 = 0.0;
  const double t2 = 2.0 * t;
  for (int j = static_cast<int>(coeff_.size()) - 1; j >= 1; --j) {
    const double tmp = b1;
    b1 = t2 * b1 - b2 + coeff_[j];
    b2 = tmp;
  }
  return t * b1 - b2 + coeff_[0];
}

}  // namespace rqft
