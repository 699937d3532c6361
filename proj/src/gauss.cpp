#include "rqft/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rqft {

namespace {

GaussRule compute_rule(int n) {
  // Newton iteration on P_n with the usual Chebyshev-based initial guess.
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.nodes[i] = -x;
    r.weights[i] = w;
    r.nodes[n - 1 - i] = x;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

std::mutex g_mutex;
std::map<int, GaussRule> g_cache;

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_cache.find(n);
  if (it == g_cache.end()) it = g_cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

void gauss_legendre_on(int n, double a, double b, std::vector<double>& x,
                       std::vector<double>& w) {
  const GaussRule& r = gauss_legendre(n);
  x.resize(n);
  w.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    x[i] = mid + half * r.nodes[i];
    w[i] = half * r.weights[i];
  }
}

}  // namespace rqft
