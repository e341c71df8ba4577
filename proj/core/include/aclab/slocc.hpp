#pragma once

// SLOCC representatives of C_n-symmetric states: the diagonal ILO
// d_k -> y^{k/2} d_k tuned so that <S_z> = 0.

#include <vector>

#include "aclab/majorana.hpp"
#include "aclab/symstate.hpp"

namespace aclab {

/// d_k -> y^{k/2} d_k, renormalized (A = diag(1, sqrt(y)) on every qubit). y > 0.
SymmetricState apply_diagonal_ilo(const SymmetricState& state, double y);

/// The unique y > 0 with sum_k (N - 2k) |d_k|^2 y^k = 0. Returns 1 when the
/// polynomial vanishes identically; throws NoRepresentativeError when its
/// coefficients never change sign.
double positive_root(const SymmetricState& state);

/// Number of sign changes in the coefficient sequence (N - 2k) |d_k|^2.
int sign_changes(const SymmetricState& state);

/// apply_diagonal_ilo(s, positive_root(s)). The input is expected in its
/// C_n canonical frame (symmetry axis along z).
SymmetricState anticoherent_representative(const SymmetricState& state);

struct DegeneracyConfig {
  std::vector<int> multiplicities;  // descending

  int diversity() const { return static_cast<int>(multiplicities.size()); }
  int total() const;
  std::string to_string() const;  // e.g. "D_{2,1,1,1}"
};

/// Clusters Majorana points whose chordal distance is below rel_tol.
DegeneracyConfig degeneracy_configuration(const SymmetricState& state, double rel_tol = 1e-4);

/// Brings a state into a frame where its best cyclic axis is z. States whose
/// support already has a common step n >= 2 are returned unchanged.
SymmetricState canonical_cyclic_frame(const SymmetricState& state, double tol = 1e-6);

/// Rigid-rotation congruence of two point sets (proper rotations only).
bool congruent(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b, double tol);

/// Compares the Majorana configurations of both representatives up to rotation.
bool slocc_equivalent(const SymmetricState& a, const SymmetricState& b, double tol = 1e-6);

}  // namespace aclab
