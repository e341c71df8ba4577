#pragma once

// Spin-coherent overlaps and the Husimi function on the Bloch sphere.

#include <Eigen/Dense>

#include <vector>

#include "aclab/symstate.hpp"

namespace aclab {

/// theta in [0, pi] from the North pole, phi in [0, 2 pi).
struct Direction {
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector3d unit_vector() const;
  static Direction from_vector(const Eigen::Vector3d& v);
  Direction antipode() const;
};

/// <n|psi> = sum_k sqrt(C(N,k)) cos^{N-k}(theta/2) sin^k(theta/2) e^{-i k phi} d_k.
Complex coherent_overlap(const SymmetricState& state, const Direction& dir);

/// Q(theta, phi) = |<n|psi>|^2.
double husimi(const SymmetricState& state, const Direction& dir);

struct HusimiGrid {
  std::vector<double> thetas;   // ascending, Gauss-Legendre in cos(theta)
  std::vector<double> weights;  // matching quadrature weights in cos(theta)
  std::vector<double> phis;     // 2 pi j / n_phi
  std::vector<double> values;   // theta-major

  double value(std::size_t i, std::size_t j) const { return values[i * phis.size() + j]; }
  /// sum of w_i (2 pi / n_phi) Q_ij
  double integral() const;
};

HusimiGrid husimi_grid(const SymmetricState& state, int n_theta, int n_phi);

/// Orthonormal Y_l^m with the Condon-Shortley phase.
Complex spherical_harmonic(int l, int m, double theta, double phi);

class HusimiMultipoles {
 public:
  explicit HusimiMultipoles(int lmax) : lmax_(lmax), moments_(static_cast<std::size_t>((lmax + 1) * (lmax + 1))) {}

  int lmax() const { return lmax_; }
  Complex& at(int l, int m) { return moments_[index(l, m)]; }
  const Complex& at(int l, int m) const { return moments_[index(l, m)]; }

 private:
  std::size_t index(int l, int m) const;

  int lmax_;
  std::vector<Complex> moments_;
};

/// Q_lm = integral of Q Y_l^m* over the sphere, by a quadrature exact for band limit 2N.
HusimiMultipoles husimi_multipoles(const SymmetricState& state, int lmax);

}  // namespace aclab
