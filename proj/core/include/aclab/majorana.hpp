#pragma once

// Majorana (stellar) representation: N points on the Bloch sphere obtained
// from the roots of P(z) = sum_k (-1)^k sqrt(C(N,k)) d_k z^k, z = cot(theta/2) e^{-i phi}.

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "aclab/sphere.hpp"
#include "aclab/symstate.hpp"

namespace aclab {

/// Relative amplitude threshold below which d_k counts as zero.
inline constexpr double kZeroAmplitude = 1e-13;

struct MajoranaConfig {
  int n_south = 0;             // roots at z = 0
  int n_north = 0;             // missing degree, z = infinity
  std::vector<Complex> roots;  // nonzero finite roots, with multiplicity

  int n_qubits() const { return n_south + n_north + static_cast<int>(roots.size()); }
  /// All N points, South pole copies first, then roots, then North pole copies.
  std::vector<Eigen::Vector3d> unit_vectors() const;
  std::vector<Direction> directions() const;
};

Direction root_to_direction(Complex z);
/// Finite z for theta in (0, pi]; theta == 0 (North pole) has no finite image.
Complex direction_to_root(const Direction& dir);
Eigen::Vector3d root_to_vector(Complex z);

/// Builds a configuration from points; directions within pole_tol of a pole
/// are snapped onto it.
MajoranaConfig config_from_directions(const std::vector<Direction>& points, double pole_tol = 1e-12);

struct MajoranaPolynomial {
  int n_south = 0;
  int n_north = 0;
  std::vector<Complex> coeffs;  // coeffs[i] multiplies z^{n_south + i}
};

/// Leading/trailing Dicke zeros (|d_k| < 1e-13 max|d|) become pole counts.
MajoranaPolynomial majorana_polynomial(const SymmetricState& state);

/// Companion-matrix roots polished by Newton. Throws NumericalError when a root
/// residual |P(z)| / max(1,|z|)^deg exceeds tol * max|p|.
MajoranaConfig majorana_points(const SymmetricState& state, double tol = 1e-10);

/// Inverse of majorana_points, up to global phase.
SymmetricState state_from_points(const MajoranaConfig& config);

struct SymmetryOp {
  enum class Kind { rotation, sigma_h, sigma_v, sigma_d, c2x, s };
  Kind kind = Kind::rotation;
  int n = 1;

  static SymmetryOp rotation(int n);
  static SymmetryOp sigma_h();
  static SymmetryOp sigma_v();
  static SymmetryOp sigma_d(int n);
  static SymmetryOp c2x();
  static SymmetryOp s(int n);

  bool swaps_poles() const;
  Complex map(Complex z) const;
  std::string to_string() const;
};

MajoranaConfig apply_symmetry(const MajoranaConfig& config, const SymmetryOp& op);

/// Largest chordal mismatch after greedy point matching; +inf when pole
/// counts or sizes differ beyond what the points can absorb.
double config_distance(const MajoranaConfig& a, const MajoranaConfig& b);

bool is_invariant(const MajoranaConfig& config, const SymmetryOp& op, double tol);

enum class GroupFamily { none, C, Cnh, Cnv, S2n, D, Dnh, Dnd };

struct GroupLabel {
  GroupFamily family = GroupFamily::none;
  int n = 0;

  std::string to_string() const;
  bool operator==(const GroupLabel&) const = default;
};

struct SymmetryFlags {
  bool sigma_h = false;
  bool sigma_v = false;
  bool sigma_d = false;
  bool c2x = false;
  bool s = false;
};

/// Assembles the axial group from a cyclic order and extra generators.
GroupLabel group_from_generators(int n, const SymmetryFlags& flags);

struct SymmetryReport {
  int max_cyclic = 1;
  std::vector<SymmetryOp> extra_ops;
  GroupLabel group;
};

/// Tests symmetry about z and the xz-plane in the configuration's own frame.
SymmetryReport detect_symmetry(const MajoranaConfig& config, double tol = 1e-7);

/// Dicke-coefficient constraints for a symmetry operation (row of the table
/// of constraints). Returns the worst violation; check_table1 compares it to tol.
double table1_residual(const SymmetricState& state, const SymmetryOp& op);
bool check_table1(const SymmetricState& state, const SymmetryOp& op, double tol = 1e-10);

/// n_S and n_N as seen by majorana_polynomial.
std::pair<int, int> pole_counts(const SymmetricState& state);

/// Label of the richest canonical coefficient pattern the state matches.
GroupLabel canonical_group_form(const SymmetricState& state, double tol = 1e-10);

Eigen::Vector3d barycenter(const MajoranaConfig& config);

struct CyclicFrame {
  int n = 1;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
};

/// Heuristic search for the axis of highest cyclic symmetry. Candidate axes are
/// the points themselves, normalized pair midpoints and, for N <= 12, normals of
/// point triples. Returns n = 1 when nothing better than the identity is found.
CyclicFrame find_cyclic_frame(const MajoranaConfig& config, double tol = 1e-6);

/// Rotation that carries `axis` onto +z.
Eigen::Matrix2cd align_axis_operator(const Eigen::Vector3d& axis);

/// Number of elements of an axial group (C_n has n; D_nh has 4n).
int group_order(const GroupLabel& label);

struct PointGroupResult {
  SymmetryReport report;
  CyclicFrame frame;
  double azimuth = 0.0;  // rotation about the axis that puts a mirror plane on xz
};

/// detect_symmetry after moving the best cyclic axis onto z and trying the
/// azimuths of points and point-pair bisectors; keeps the largest group.
PointGroupResult detect_point_group(const MajoranaConfig& config, double tol = 1e-7);

}  // namespace aclab
