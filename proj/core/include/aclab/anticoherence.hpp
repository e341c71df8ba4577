#pragma once

// Order-t anticoherence tests: spin-operator moments, Dicke-coefficient sums,
// reduced density matrices and state multipoles.

#include <array>
#include <string>
#include <vector>

#include "aclab/symstate.hpp"

namespace aclab {

enum class Method { spin_operator, dicke, reduced, multipole };

inline constexpr std::array<Method, 4> kAllMethods = {Method::spin_operator, Method::dicke,
                                                      Method::reduced, Method::multipole};

/// "operator", "dicke", "reduced", "multipole".
std::string to_string(Method method);

// Residuals are the worst violation at order t, scaled as the checks scale
// them; check_x(s, t, tol) is residual_x(s, t) < tol.
double operator_residual(const SymmetricState& state, int t);
double dicke_residual(const SymmetricState& state, int t);
double reduced_residual(const SymmetricState& state, int t);
double multipole_residual(const SymmetricState& state, int t);
double residual(Method method, const SymmetricState& state, int t);

/// <S_+^r S_z^q> = A(q) delta_{r0} for r + q <= t. Each deviation is divided
/// by max(1, (N/2)^{q+r}).
bool check_operator(const SymmetricState& state, int t, double tol = 1e-10);

/// Diagonal sums equal A(q) for q <= t and off-diagonal sums vanish for
/// 1 <= r <= t, q <= t - r; same scaling as check_operator.
bool check_dicke(const SymmetricState& state, int t, double tol = 1e-10);

/// Number of real equations tested by check_dicke at order t beyond normalization.
int dicke_condition_count(int t);

/// max |rho_t - 1/(t+1)| < tol.
bool check_reduced(const SymmetricState& state, int t, double tol = 1e-10);

/// |c_lm| < tol for 0 < l <= t.
bool check_multipole(const SymmetricState& state, int t, double tol = 1e-10);

bool check(Method method, const SymmetricState& state, int t, double tol = 1e-10);

/// Largest t such that the method's check passes at every order 1..t.
int certified_order(Method method, const SymmetricState& state, double tol = 1e-10);

struct AnticoherenceReport {
  int order = 0;
  std::array<int, 4> per_method{};       // indexed like kAllMethods
  std::array<double, 4> residual_next{}; // residual at order + 1 (0 if order == N)
  int n_qubits = 0;

  int order_for(Method method) const { return per_method[static_cast<std::size_t>(method)]; }
};

/// Runs all four characterizations. Throws DiagnosticError if they disagree.
AnticoherenceReport analyze(const SymmetricState& state, double tol = 1e-10);

/// Order from check_reduced, cross-checked against the operator and Dicke methods.
int order_of_anticoherence(const SymmetricState& state, double tol = 1e-10);

/// <j1 m1; j2 m2 | J M> with all arguments doubled, evaluated exactly then rounded.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_big_j, int two_big_m);

/// Coefficients c_lm = tr(rho T_l^m^dagger) with orthonormal multipole operators.
class MultipoleTable {
 public:
  explicit MultipoleTable(int lmax) : lmax_(lmax), coeffs_(static_cast<std::size_t>((lmax + 1) * (lmax + 1))) {}

  int lmax() const { return lmax_; }
  Complex& at(int l, int m) { return coeffs_[index(l, m)]; }
  const Complex& at(int l, int m) const { return coeffs_[index(l, m)]; }

 private:
  std::size_t index(int l, int m) const;

  int lmax_;
  std::vector<Complex> coeffs_;
};

/// Throws IndexError if lmax > N or lmax < 0.
MultipoleTable multipole_coeffs(const SymmetricState& state, int lmax);

/// Matrix of T_l^m in the |j, m> basis ordered m = j, j-1, ..., -j (Dicke order).
Eigen::MatrixXd multipole_operator(int n_qubits, int l, int m);

}  // namespace aclab
