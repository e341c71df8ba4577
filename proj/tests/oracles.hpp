#pragma once

// Independent reference models used only by the tests: dense spin matrices,
// the full 2^N qubit vector, and seeded random states.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "aclab/symstate.hpp"

namespace oracle {

using Complex = std::complex<double>;

struct SpinOps {
  Eigen::MatrixXcd jx, jy, jz;
};

// Textbook spin-j matrices in the basis m = j, j-1, ..., -j.
inline SpinOps spin_ops(int n_qubits) {
  const int dim = n_qubits + 1;
  const double j = n_qubits / 2.0;
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const double m = j - a;
    jz(a, a) = m;
    if (a > 0) jp(a - 1, a) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Complex i(0, 1);
  return {(jp + jp.adjoint()) / 2.0, (jp - jp.adjoint()) / (2.0 * i), jz};
}

// <(J.n)^k> evaluated by dense matrix powers.
inline double directional_moment(const aclab::SymmetricState& s, const Eigen::Vector3d& n, int k) {
  const auto ops = spin_ops(s.n_qubits());
  const Eigen::MatrixXcd jn = n.x() * ops.jx + n.y() * ops.jy + n.z() * ops.jz;
  Eigen::VectorXcd v = s.as_vector();
  const Eigen::VectorXcd psi = v;
  for (int p = 0; p < k; ++p) v = jn * v;
  return psi.dot(v).real();
}

// Full 2^N amplitudes; a bit set to 1 is an excitation.
inline Eigen::VectorXcd qubit_vector(const aclab::SymmetricState& s) {
  const int n = s.n_qubits();
  Eigen::VectorXcd psi(1 << n);
  for (int b = 0; b < (1 << n); ++b) {
    const int k = std::popcount(static_cast<unsigned>(b));
    psi(b) = s[k] / std::sqrt(aclab::binomial(n, k));
  }
  return psi;
}

// Trace out the last N - t qubits (low bits) of the full vector, then
// express the result in the t-qubit Dicke basis.
inline Eigen::MatrixXcd brute_force_reduced(const aclab::SymmetricState& s, int t) {
  const int n = s.n_qubits();
  const Eigen::VectorXcd psi = qubit_vector(s);
  const int keep = 1 << t, rest = 1 << (n - t);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(keep, keep);
  for (int a = 0; a < keep; ++a) {
    for (int b = 0; b < keep; ++b) {
      Complex sum = 0;
      for (int e = 0; e < rest; ++e) sum += psi(a * rest + e) * std::conj(psi(b * rest + e));
      rho(a, b) = sum;
    }
  }
  Eigen::MatrixXcd dicke = Eigen::MatrixXcd::Zero(keep, t + 1);
  for (int a = 0; a < keep; ++a) {
    const int l = std::popcount(static_cast<unsigned>(a));
    dicke(a, l) = 1.0 / std::sqrt(aclab::binomial(t, l));
  }
  return dicke.adjoint() * rho * dicke;
}

inline aclab::SymmetricState random_state(std::mt19937_64& rng, int n_qubits) {
  std::normal_distribution<double> g;
  std::vector<Complex> d(static_cast<std::size_t>(n_qubits) + 1);
  for (auto& c : d) c = Complex(g(rng), g(rng));
  return aclab::SymmetricState(d);
}

inline Eigen::Vector3d random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  return v.normalized();
}

// Global-phase-insensitive distance between two states.
inline double ray_distance(const aclab::SymmetricState& a, const aclab::SymmetricState& b) {
  const Eigen::VectorXcd u = a.as_vector(), v = b.as_vector();
  const Complex ov = u.dot(v);
  const Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1);
  return (u * phase - v).cwiseAbs().maxCoeff();
}

}  // namespace oracle
