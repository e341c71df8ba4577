#include "aclab/lp.hpp"

#include "aclab/errors.hpp"

namespace aclab {

SimplexResult simplex_feasible(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw BadShapeError("row count and rhs length differ");
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != n) throw BadShapeError("ragged constraint matrix");
  }

  // Tableau over n structural + m artificial columns, last column is the rhs.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = flip ? Rational(-rows[i][j]) : rows[i][j];
    tab[i][n + i] = 1;
    tab[i][cols] = flip ? Rational(-rhs[i]) : rhs[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-1 objective (sum of artificials).
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= n && j < cols) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s -= tab[i][j];
    cost[j] = s;
  }

  SimplexResult result;
  while (true) {
    // Bland: smallest index with negative reduced cost enters.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    // Ratio test, ties broken by smallest basic variable index.
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw NumericalError("phase-1 objective unbounded, which cannot happen");
    const Rational pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      const Rational factor = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(tab[leave][j]) != 0) tab[i][j] -= factor * tab[leave][j];
      }
    }
    if (sgn(cost[enter]) != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(tab[leave][j]) != 0) cost[j] -= factor * tab[leave][j];
      }
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.phase1_optimum = -cost[cols];
  result.feasible = sgn(result.phase1_optimum) == 0;
  if (result.feasible) {
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.x[basis[i]] = tab[i][cols];
    }
  }
  return result;
}

}  // namespace aclab
