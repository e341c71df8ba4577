#include "aclab/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aclab/errors.hpp"
#include "aclab/legendre.hpp"

namespace aclab {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_phi(double phi) {
  double out = std::fmod(phi, 2.0 * kPi);
  if (out < 0.0) out += 2.0 * kPi;
  if (out >= 2.0 * kPi) out = 0.0;
  return out;
}

// pbar[l][m] for 0 <= m <= l <= lmax: orthonormal associated Legendre
// functions (Condon-Shortley phase included) at x = cos(theta).
std::vector<std::vector<double>> normalized_legendre(int lmax, double x) {
  std::vector<std::vector<double>> pbar(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l) pbar[static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(l) + 1, 0.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  double pmm = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) pmm *= -s * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    pbar[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)] = pmm;
    if (m + 1 > lmax) continue;
    double p_prev = pmm;
    double p = x * std::sqrt(2.0 * m + 3.0) * pmm;
    pbar[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(m)] = p;
    for (int l = m + 2; l <= lmax; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
      const double a_prev =
          std::sqrt((4.0 * (l - 1) * (l - 1) - 1.0) / (static_cast<double>(l - 1) * (l - 1) - static_cast<double>(m) * m));
      const double next = a * (x * p - p_prev / a_prev);
      p_prev = p;
      p = next;
      pbar[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] = p;
    }
  }
  return pbar;
}

}  // namespace

Eigen::Vector3d Direction::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Direction Direction::from_vector(const Eigen::Vector3d& v) {
  const double r = v.norm();
  if (r == 0.0) throw InputError("direction from zero vector");
  Direction d;
  d.theta = std::acos(std::clamp(v.z() / r, -1.0, 1.0));
  d.phi = wrap_phi(std::atan2(v.y(), v.x()));
  return d;
}

Direction Direction::antipode() const { return Direction{kPi - theta, wrap_phi(phi + kPi)}; }

Complex coherent_overlap(const SymmetricState& state, const Direction& dir) {
  const int n = state.n_qubits();
  const double c = std::cos(dir.theta / 2.0);
  const double s = std::sin(dir.theta / 2.0);
  const double abs_c = std::abs(c);
  const double abs_s = std::abs(s);
  Complex sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const Complex d = state[k];
    if (d == Complex(0.0)) continue;
    double magnitude;
    if ((n - k > 0 && abs_c == 0.0) || (k > 0 && abs_s == 0.0)) {
      magnitude = 0.0;
    } else {
      double log_mag = 0.5 * log_binomial(n, k);
      if (n - k > 0) log_mag += (n - k) * std::log(abs_c);
      if (k > 0) log_mag += k * std::log(abs_s);
      magnitude = std::exp(log_mag);
      if (c < 0.0 && (n - k) % 2 == 1) magnitude = -magnitude;
      if (s < 0.0 && k % 2 == 1) magnitude = -magnitude;
    }
    sum += magnitude * std::polar(1.0, -k * dir.phi) * d;
  }
  return sum;
}

double husimi(const SymmetricState& state, const Direction& dir) { return std::norm(coherent_overlap(state, dir)); }

double HusimiGrid::integral() const {
  double total = 0.0;
  const double dphi = 2.0 * kPi / static_cast<double>(phis.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = 0; j < phis.size(); ++j) total += weights[i] * dphi * value(i, j);
  }
  return total;
}

HusimiGrid husimi_grid(const SymmetricState& state, int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw InputError("grid sizes must be >= 1");
  const auto rule = legendre_nodes_weights(n_theta - 1);
  HusimiGrid grid;
  // Nodes ascend in cos(theta); walk them backwards so theta ascends.
  for (int i = n_theta - 1; i >= 0; --i) {
    grid.thetas.push_back(std::acos(std::clamp(rule.nodes[static_cast<std::size_t>(i)], -1.0, 1.0)));
    grid.weights.push_back(rule.weights[static_cast<std::size_t>(i)]);
  }
  for (int j = 0; j < n_phi; ++j) grid.phis.push_back(2.0 * kPi * j / n_phi);
  grid.values.reserve(grid.thetas.size() * grid.phis.size());
  for (const double theta : grid.thetas) {
    for (const double phi : grid.phis) grid.values.push_back(husimi(state, Direction{theta, phi}));
  }
  return grid;
}

Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw IndexError("spherical harmonic index out of range");
  const auto pbar = normalized_legendre(l, std::cos(theta));
  const int am = std::abs(m);
  const Complex positive = pbar[static_cast<std::size_t>(l)][static_cast<std::size_t>(am)] * std::polar(1.0, am * phi);
  if (m >= 0) return positive;
  return ((am % 2 == 0) ? 1.0 : -1.0) * std::conj(positive);
}

std::size_t HusimiMultipoles::index(int l, int m) const {
  if (l < 0 || l > lmax_ || std::abs(m) > l) throw IndexError("Husimi multipole index out of range");
  return static_cast<std::size_t>(l * l + (m + l));
}

HusimiMultipoles husimi_multipoles(const SymmetricState& state, int lmax) {
  const int n = state.n_qubits();
  if (lmax < 0 || lmax > n) throw IndexError("lmax must satisfy 0 <= lmax <= N");
  const auto grid = husimi_grid(state, n + 1, 2 * n + 2);
  HusimiMultipoles out(lmax);
  const double dphi = 2.0 * kPi / static_cast<double>(grid.phis.size());
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    const auto pbar = normalized_legendre(lmax, std::cos(grid.thetas[i]));
    for (int m = -lmax; m <= lmax; ++m) {
      const int am = std::abs(m);
      // Y_l^m* = (-1)^m pbar_l^|m| e^{-i m phi} for negative m as well.
      const double sign = (m < 0 && am % 2 == 1) ? -1.0 : 1.0;
      Complex ring = 0.0;
      for (std::size_t j = 0; j < grid.phis.size(); ++j) {
        ring += grid.value(i, j) * std::polar(1.0, -m * grid.phis[j]);
      }
      ring *= sign * grid.weights[i] * dphi;
      for (int l = am; l <= lmax; ++l) out.at(l, m) += pbar[static_cast<std::size_t>(l)][static_cast<std::size_t>(am)] * ring;
    }
  }
  return out;
}

}  // namespace aclab
