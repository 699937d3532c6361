#pragma once

#include <functional>
#include <vector>

namespace rqft {

// Chebyshev interpolant of a smooth function on [a, b]. Coefficients are
// truncated at the requested absolute tail tolerance.
class ChebyshevInterpolant {
 public:
  ChebyshevInterpolant() = default;
  ChebyshevInterpolant(const std::function<double(double)>& f, double a,
                       double b, int max_degree, double tail_tol = 1e-15);

  double operator()(double x) const;  // Clenshaw evaluation
  double a() const { return a_; }
  double b() const { return b_; }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }

 private:
  double a_ = 0.0, b_ = 1.0;
  std::vector<double> coeff_;
};

}  // namespace rqft
