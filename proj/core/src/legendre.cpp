#include "aclab/legendre.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "aclab/errors.hpp"

namespace aclab {

std::pair<double, double> legendre_pair(int n, double x) {
  double p_prev = 0.0;
  double p = 1.0;
  for (int k = 1; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    p_prev = p;
    p = next;
  }
  return {p, p_prev};
}

GaussLegendreRule legendre_nodes_weights(int t) {
  if (t < 0) throw IndexError("Gauss-Legendre order must be >= 0");
  const int n = t + 1;
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like guess for the i-th largest root, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, pm1] = legendre_pair(n, x);
      dp = n * (x * p - pm1) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, pm1] = legendre_pair(n, x);
    dp = n * (x * p - pm1) / (x * x - 1.0);
    // P_t(u) = pm1; weight formula uses the derivative at the root.
    const double w = 2.0 / (n * dp * pm1);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    const auto lo = static_cast<std::size_t>(i);
    rule.nodes[hi] = x;
    rule.weights[hi] = w;
    rule.nodes[lo] = -x;
    rule.weights[lo] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace aclab
