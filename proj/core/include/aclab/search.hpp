#pragma once

// C_n-symmetric t-anticoherent states: the diagonal linear system solved
// exactly by linear programming, the (t, N) scan, named families and the
// Gauss-Legendre construction.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aclab/legendre.hpp"
#include "aclab/rational.hpp"
#include "aclab/symstate.hpp"

namespace aclab {

/// d = sqrt(prob) e^{i pi phase}; prob >= 0, phase in [0, 2).
struct ExactAmplitude {
  Rational prob;
  Rational phase;
};

using ExactState = std::vector<ExactAmplitude>;

/// Rescales probabilities to sum to one. Throws ZeroStateError on all-zero input.
ExactState normalize_exact(ExactState state);
SymmetricState to_state(const ExactState& exact);

struct LPInstance {
  int t = 0;
  int n_qubits = 0;
  int n = 0;
  int n_south = 0;
  int n_north = 0;
  int r = 0;
  std::vector<std::vector<Rational>> matrix;  // (t+1) x (r+1): u_k^q
  std::vector<Rational> rhs;                  // A(q)

  /// u_k = N/2 - k n - n_S
  Rational u(int k) const;
};

/// Throws BadShapeError unless n > t >= 1, n_S, n_N >= 0 and n divides N - n_S - n_N >= 0.
LPInstance make_lp_instance(int t, int n_qubits, int n, int n_south, int n_north);

struct LPOutcome {
  bool feasible = false;
  std::vector<Rational> x;  // r+1 entries when feasible
  Rational phase1_optimum;  // > 0 certifies infeasibility
};

/// Exact phase-1 simplex on rows scaled by 2^q (N+1). column_order, when
/// given, permutes the unknowns before solving (results are mapped back).
LPOutcome lp_feasible(const LPInstance& instance, const std::vector<int>* column_order = nullptr);
LPOutcome lp_feasible(int t, int n_qubits, int n, int n_south, int n_north);

/// True iff matrix * x == rhs exactly and x >= 0.
bool verify_lp_solution(const LPInstance& instance, const std::vector<Rational>& x);

/// d_{n_S + k n} = sqrt(x_k).
ExactState assemble_lp_state(const LPInstance& instance, const std::vector<Rational>& x);

struct ScanRecord {
  int t = 0;
  int n_qubits = 0;
  bool feasible = false;
  int n = 0;
  int n_south = 0;
  int n_north = 0;
  std::vector<Rational> x;
  long long instances_tried = 0;
};

struct ScanOptions {
  int threads = 1;
  /// Called once per finished N (from worker threads, serialized).
  std::function<void(const ScanRecord&)> progress;
};

/// For each N in [n_min, n_max]: n from N down to t+1, n_S + n_N ascending,
/// n_S ascending; the first feasible tuple is the witness. Records are in N order.
std::vector<ScanRecord> scan(int t, int n_min, int n_max, const ScanOptions& options = {});

/// Smallest feasible N in [t+1, n_max], or nullopt.
std::optional<int> minimal_feasible_n(int t, int n_max, int threads = 1);

struct QuadraticTrend {
  double a = 0.0;
  double b = 0.0;
};

/// Least-squares N = a t^2 + b t.
QuadraticTrend fit_quadratic_trend(const std::vector<std::pair<int, int>>& points);

/// Named constructors. Parameters: "N" (qubits), "m" (dnh5 family index), "k" (dicke).
using FamilyParams = std::map<std::string, int>;
ExactState family_exact(const std::string& name, const FamilyParams& params = {});
SymmetricState family_state(const std::string& name, const FamilyParams& params = {});
std::vector<std::string> family_names();

struct GLPlan {
  int t = 0;
  int n_qubits = 0;
  bool symmetric = false;
  GaussLegendreRule rule;
  std::vector<int> positions;
  std::vector<Rational> exact_solution;  // x_i, one per position
  std::vector<double> solution;
  int min_gap = 0;
  bool positive = false;
  bool spaced = false;
  std::string diagnostics;

  bool success() const { return positive && spaced; }
};

/// k_i = floor(N (1 + u_i) / 2) for the t+1 Legendre roots.
std::vector<int> gl_positions(int t, int n_qubits);
/// Mirrored positions k_{t-i} = N - k_i (t even, middle node at N/2).
std::vector<int> gl_positions_symmetric(int t, int n_qubits);
int min_gap(const std::vector<int>& positions);

/// Solves M X = B exactly for the given positions; NumericalError if singular.
GLPlan gl_plan(int t, int n_qubits);
GLPlan gl_plan_symmetric(int t, int n_qubits);

struct GLResult {
  GLPlan plan;
  std::optional<SymmetricState> state;
};

GLResult gl_construct(int t, int n_qubits);
GLResult gl_construct_symmetric(int t, int n_qubits);

/// First N >= n_start (up to n_max) where the construction succeeds.
std::optional<GLResult> gl_first_success(int t, bool symmetric, int n_start, int n_max);

/// t (t+1) (t+2) / 6
int gl_default_n(int t);

}  // namespace aclab
