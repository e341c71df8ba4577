#pragma once

// Permutation-symmetric N-qubit states in the Dicke basis, equivalently
// spin-j states with j = N/2 under |D_N^(k)> <-> |j, j-k>.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "aclab/rational.hpp"

namespace aclab {

using Complex = std::complex<double>;

/// Normalized vector of N+1 Dicke amplitudes d_k.
class SymmetricState {
 public:
  /// Rescales to unit norm, keeping relative phases. Throws ZeroStateError
  /// when every amplitude is zero and InputError when the vector is empty.
  explicit SymmetricState(std::vector<Complex> dicke);

  int n_qubits() const { return static_cast<int>(dicke_.size()) - 1; }
  std::span<const Complex> dicke() const { return dicke_; }
  const Complex& operator[](int k) const { return dicke_[static_cast<std::size_t>(k)]; }

  /// Spin coefficient c_m with m = j - k.
  Complex spin_coefficient(int two_m) const;

  Eigen::VectorXcd as_vector() const;

 private:
  std::vector<Complex> dicke_;
};

/// Convenience overload of the constructor.
SymmetricState new_state(std::vector<Complex> dicke);

/// Reduced t-qubit density matrix in the Dicke basis {|D_t^(l)>}.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Complex& operator()(int row, int col) const { return entries_(row, col); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

  /// max |rho_ij - delta_ij/dim|.
  double deviation_from_maximally_mixed() const;

 private:
  Eigen::MatrixXcd entries_;
};

/// A(q) = (1/(N+1)) sum_k (N/2 - k)^q, exactly.
Rational a_moment(int n_qubits, int q);

/// |B(k, r)| = prod_{j<r} sqrt((k+j+1)(N-k-j)); throws IndexError if k + r > N.
double ladder_element(int n_qubits, int k, int r);

/// sum_k |B(k,r)| (N/2 - k)^q conj(d_k) d_{k+r}; real for r = 0.
Complex expectation_srz(const SymmetricState& state, int r, int q);

/// rho_t for 1 <= t <= N; throws IndexError otherwise.
DensityMatrix reduced_density(const SymmetricState& state, int t);

/// -tr(rho_t ln rho_t); eigenvalues below 1e-14 are dropped.
double entanglement_entropy(const SymmetricState& state, int t);

/// A^{(x)N} |psi>, renormalized. A must be invertible.
SymmetricState apply_local_operator(const SymmetricState& state, const Eigen::Matrix2cd& op);

/// exp(-i angle axis.sigma / 2): rotates Bloch vectors by `angle` about `axis`.
Eigen::Matrix2cd rotation_operator(const Eigen::Vector3d& axis, double angle);

/// SO(3) matrix matching rotation_operator(axis, angle).
Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double angle);

/// Dicke-basis |D_N^(k)>.
SymmetricState dicke_state(int n_qubits, int k);

/// C(n, k) as double; +inf on overflow.
double binomial(int n, int k);
/// ln C(n, k).
double log_binomial(int n, int k);

}  // namespace aclab
