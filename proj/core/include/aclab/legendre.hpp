#pragma once

#include <vector>

namespace aclab {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending roots of P_{t+1}
  std::vector<double> weights;
};

/// (P_n(x), P_{n-1}(x)) by the three-term recurrence; P_{-1} taken as 0.
std::pair<double, double> legendre_pair(int n, double x);

/// t+1 Gauss-Legendre nodes on [-1, 1] with weights 2 / ((t+1) P'_{t+1}(u) P_t(u)).
GaussLegendreRule legendre_nodes_weights(int t);

}  // namespace aclab
