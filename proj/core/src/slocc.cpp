#include "aclab/slocc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "aclab/errors.hpp"

namespace aclab {

SymmetricState apply_diagonal_ilo(const SymmetricState& state, double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw InputError("ILO parameter y must be positive and finite");
  const int n = state.n_qubits();
  const double log_y = std::log(y);
  // Shift exponents so the largest factor is 1; the state is renormalized anyway.
  const double shift = (log_y > 0.0) ? 0.5 * n * log_y : 0.0;
  std::vector<Complex> out(state.dicke().begin(), state.dicke().end());
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] *= std::exp(0.5 * k * log_y - shift);
  return SymmetricState(std::move(out));
}

namespace {

// (N - 2k) |d_k|^2 with numerically-zero amplitudes dropped.
std::vector<double> descartes_coefficients(const SymmetricState& state) {
  const int n = state.n_qubits();
  double scale = 0.0;
  for (const auto& d : state.dicke()) scale = std::max(scale, std::abs(d));
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    if (std::abs(state[k]) < kZeroAmplitude * scale) continue;
    a[static_cast<std::size_t>(k)] = (n - 2 * k) * std::norm(state[k]);
  }
  return a;
}

// e^{-M} sum_k a_k e^{k s} and its s-derivative, M the largest log-term.
struct LogEval {
  double value;
  double derivative;
};

LogEval eval_log(const std::vector<double>& a, double s) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0.0) m = std::max(m, std::log(std::abs(a[k])) + static_cast<double>(k) * s);
  }
  LogEval out{0.0, 0.0};
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0.0) continue;
    const double magnitude = std::exp(std::log(std::abs(a[k])) + static_cast<double>(k) * s - m);
    const double term = (a[k] > 0.0) ? magnitude : -magnitude;
    out.value += term;
    out.derivative += static_cast<double>(k) * term;
  }
  return out;
}

}  // namespace

int sign_changes(const SymmetricState& state) {
  int changes = 0;
  int last = 0;
  for (const double c : descartes_coefficients(state)) {
    const int sign = (c > 0.0) - (c < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

double positive_root(const SymmetricState& state) {
  const auto a = descartes_coefficients(state);
  if (std::all_of(a.begin(), a.end(), [](double c) { return c == 0.0; })) return 1.0;
  const int changes = sign_changes(state);
  if (changes == 0) {
    throw NoRepresentativeError("coefficients of sum (N-2k)|d_k|^2 y^k never change sign; no positive root");
  }
  if (changes != 1) throw NumericalError("expected exactly one sign change");

  // Bracket in s = ln y: the sum is positive for s -> -inf, negative for s -> +inf.
  double lo = -1.0, hi = 1.0;
  while (eval_log(a, lo).value <= 0.0) {
    lo *= 2.0;
    if (lo < -1e4) throw NumericalError("failed to bracket the positive root");
  }
  while (eval_log(a, hi).value >= 0.0) {
    hi *= 2.0;
    if (hi > 1e4) throw NumericalError("failed to bracket the positive root");
  }
  while (hi - lo > 1e-8 * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (eval_log(a, mid).value > 0.0) lo = mid; else hi = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int iter = 0; iter < 50; ++iter) {
    const auto e = eval_log(a, s);
    if (e.derivative == 0.0) break;
    const double step = e.value / e.derivative;
    s -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(s))) break;
  }
  return std::exp(s);
}

SymmetricState anticoherent_representative(const SymmetricState& state) {
  return apply_diagonal_ilo(state, positive_root(state));
}

int DegeneracyConfig::total() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

std::string DegeneracyConfig::to_string() const {
  std::ostringstream out;
  out << "D_{";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) out << (i ? "," : "") << multiplicities[i];
  out << '}';
  return out.str();
}

DegeneracyConfig degeneracy_configuration(const SymmetricState& state, double rel_tol) {
  const auto pts = majorana_points(state, 1e-8).unit_vectors();
  // Single-linkage clustering: union points closer than rel_tol.
  std::vector<int> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if ((pts[i] - pts[j]).norm() < rel_tol) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    }
  }
  std::vector<int> counts(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) ++counts[static_cast<std::size_t>(find(static_cast<int>(i)))];
  DegeneracyConfig out;
  for (const int c : counts) {
    if (c > 0) out.multiplicities.push_back(c);
  }
  std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
  return out;
}

namespace {

int support_step(const SymmetricState& state) {
  const auto [n_south, n_north] = pole_counts(state);
  double scale = 0.0;
  for (const auto& d : state.dicke()) scale = std::max(scale, std::abs(d));
  int step = 0;
  int support = 0;
  for (int k = n_south; k <= state.n_qubits() - n_north; ++k) {
    if (std::abs(state[k]) < kZeroAmplitude * scale) continue;
    ++support;
    step = std::gcd(step, k - n_south);
  }
  return support <= 1 ? std::max(state.n_qubits(), 1) : step;
}

}  // namespace

SymmetricState canonical_cyclic_frame(const SymmetricState& state, double tol) {
  if (support_step(state) >= 2) return state;
  const auto frame = find_cyclic_frame(majorana_points(state, 1e-8), tol);
  if (frame.n < 2) throw InputError("no cyclic symmetry found; SLOCC representatives need a C_n frame");
  const auto rotated = apply_local_operator(state, align_axis_operator(frame.axis));
  // Keep only the dominant residue class mod n; the rest is alignment noise.
  const int n = frame.n;
  std::vector<double> weight(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k <= rotated.n_qubits(); ++k) weight[static_cast<std::size_t>(k % n)] += std::norm(rotated[k]);
  const auto residue = static_cast<int>(std::max_element(weight.begin(), weight.end()) - weight.begin());
  std::vector<Complex> projected(rotated.dicke().begin(), rotated.dicke().end());
  for (int k = 0; k <= rotated.n_qubits(); ++k) {
    if (k % n != residue) projected[static_cast<std::size_t>(k)] = 0.0;
  }
  return SymmetricState(std::move(projected));
}

namespace {

double max_mismatch(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b) {
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const auto& p : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = (p - b[j]).norm();
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best == std::numeric_limits<double>::infinity()) return best;
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<double> pairwise_distances(const std::vector<Eigen::Vector3d>& pts) {
  std::vector<double> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back((pts[i] - pts[j]).norm());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::Matrix3d frame_of(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  Eigen::Matrix3d f;
  const Eigen::Vector3d e1 = u.normalized();
  const Eigen::Vector3d e2 = (v - v.dot(e1) * e1).normalized();
  f.col(0) = e1;
  f.col(1) = e2;
  f.col(2) = e1.cross(e2);
  return f;
}

}  // namespace

bool congruent(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b, double tol) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto da = pairwise_distances(a);
  const auto db = pairwise_distances(b);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (std::abs(da[i] - db[i]) > 4.0 * tol) return false;
  }

  // Anchor: a[0] and the point least collinear with it.
  std::size_t j_anchor = 0;
  double best_cross = 0.0;
  for (std::size_t j = 1; j < a.size(); ++j) {
    const double c = a[0].cross(a[j]).norm();
    if (c > best_cross) {
      best_cross = c;
      j_anchor = j;
    }
  }
  auto try_rotation = [&](const Eigen::Matrix3d& r) {
    std::vector<Eigen::Vector3d> moved;
    moved.reserve(a.size());
    for (const auto& p : a) moved.push_back(r * p);
    return max_mismatch(moved, b) < tol;
  };

  if (best_cross < 1e-9) {
    // Every point lies on one line through the origin.
    for (const auto& target : b) {
      if (try_rotation(Eigen::Quaterniond::FromTwoVectors(a[0], target).toRotationMatrix())) return true;
    }
    return false;
  }
  const Eigen::Matrix3d fa = frame_of(a[0], a[j_anchor]);
  const double anchor_dot = a[0].dot(a[j_anchor]);
  for (std::size_t k = 0; k < b.size(); ++k) {
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (k == l) continue;
      if (std::abs(b[k].dot(b[l]) - anchor_dot) > 8.0 * tol) continue;
      if (b[k].cross(b[l]).norm() < 1e-9) continue;
      const Eigen::Matrix3d r = frame_of(b[k], b[l]) * fa.transpose();
      if (try_rotation(r)) return true;
    }
  }
  return false;
}

bool slocc_equivalent(const SymmetricState& a, const SymmetricState& b, double tol) {
  if (a.n_qubits() != b.n_qubits()) return false;
  const auto rep_a = anticoherent_representative(canonical_cyclic_frame(a));
  const auto rep_b = anticoherent_representative(canonical_cyclic_frame(b));
  return congruent(majorana_points(rep_a, 1e-8).unit_vectors(), majorana_points(rep_b, 1e-8).unit_vectors(), tol);
}

}  // namespace aclab
