#pragma once

// Exact-rational phase-1 simplex (Bland's rule) for feasibility of
// A x = b, x >= 0.

#include <vector>

#include "aclab/rational.hpp"

namespace aclab {

struct SimplexResult {
  bool feasible = false;
  Rational phase1_optimum;  // sum of artificials at the optimum; 0 iff feasible
  std::vector<Rational> x;  // a basic feasible point when feasible
  int pivots = 0;
};

/// Decides whether rows * x = rhs has a solution with x >= 0.
SimplexResult simplex_feasible(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs);

}  // namespace aclab
