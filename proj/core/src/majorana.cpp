#include "aclab/majorana.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "aclab/errors.hpp"

namespace aclab {

namespace {

constexpr double kPi = std::numbers::pi;

// P(z) / max(1, |z|)^deg, evaluated so that large |z| cannot overflow.
Complex scaled_eval(const std::vector<Complex>& c, Complex z) {
  const std::size_t deg = c.size() - 1;
  Complex acc = 0.0;
  if (std::abs(z) <= 1.0) {
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  }
  const Complex w = 1.0 / z;
  for (std::size_t i = 0; i <= deg; ++i) acc = acc * w + c[i];
  return acc;
}

// P(z) and P'(z) by Horner.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, Complex z) {
  Complex p = 0.0, dp = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

// Diagonal similarity that equalizes row and column norms (radix-2 balancing).
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  for (bool converged = false; !converged;) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double col = 0.0, row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        row += std::abs(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double f = 1.0;
      const double total = col + row;
      while (col < row / 2) {
        col *= 2;
        row /= 2;
        f *= 2;
      }
      while (col >= row * 2) {
        col /= 2;
        row *= 2;
        f /= 2;
      }
      if (col + row < 0.95 * total) {
        converged = false;
        a.col(i) *= f;
        a.row(i) /= f;
      }
    }
  }
}

// Roots of sum_i c[i] z^i with c[0] != 0 and c.back() != 0.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  // Rescale z = s w so the constant and leading terms have equal magnitude.
  const double s = std::exp((std::log(std::abs(c.front())) - std::log(std::abs(c.back()))) / deg);
  const double log_s = std::log(s);
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) {
    const Complex b = c[static_cast<std::size_t>(i)] / c.back() * std::exp((i - deg) * log_s);
    companion(i, deg - 1) = -b;
  }
  balance(companion);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue solver did not converge");
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    Complex z = s * solver.eigenvalues()(i);
    // Newton polish, halving the step until the residual drops.
    for (int step = 0; step < 8; ++step) {
      const auto [p, dp] = eval_with_derivative(c, z);
      if (dp == Complex(0.0)) break;
      const double current = std::abs(scaled_eval(c, z));
      Complex delta = p / dp;
      bool improved = false;
      for (int halving = 0; halving < 4 && !improved; ++halving, delta *= 0.5) {
        const Complex candidate = z - delta;
        if (std::isfinite(candidate.real()) && std::isfinite(candidate.imag()) &&
            std::abs(scaled_eval(c, candidate)) < current) {
          z = candidate;
          improved = true;
        }
      }
      if (!improved) break;
    }
    roots.push_back(z);
  }
  return roots;
}

// Greedy matching cost between two point lists of equal size.
double greedy_mismatch(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
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
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

// Largest n in [2, limit] for which rotating the points by 2 pi / n about z
// maps the set onto itself; 1 if none.
int cyclic_order(const std::vector<Eigen::Vector3d>& pts, int limit, double tol) {
  for (int n = limit; n >= 2; --n) {
    const Eigen::Matrix3d r = Eigen::AngleAxisd(2.0 * kPi / n, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    std::vector<Eigen::Vector3d> rotated;
    rotated.reserve(pts.size());
    for (const auto& p : pts) rotated.push_back(r * p);
    if (greedy_mismatch(rotated, pts) < tol) return n;
  }
  return 1;
}

bool is_zero_amplitude(Complex d, double scale) { return std::abs(d) < kZeroAmplitude * scale; }

double max_amplitude(const SymmetricState& state) {
  double m = 0.0;
  for (const auto& d : state.dicke()) m = std::max(m, std::abs(d));
  return m;
}

// Multiply by e^{-i arg(first nonzero)} so that a real-up-to-phase vector becomes real.
std::vector<Complex> remove_global_phase(std::vector<Complex> v) {
  double scale = 0.0;
  for (const auto& d : v) scale = std::max(scale, std::abs(d));
  for (const auto& d : v) {
    if (!is_zero_amplitude(d, scale)) {
      const Complex phase = std::conj(d) / std::abs(d);
      for (auto& x : v) x *= phase;
      break;
    }
  }
  return v;
}

double imaginary_residual(const std::vector<Complex>& v) {
  double worst = 0.0;
  for (const auto& x : remove_global_phase(v)) worst = std::max(worst, std::abs(x.imag()));
  return worst;
}

// Least-squares e^{i xi} minimizing sum_k |d_{N-k} - sign_k e^{i xi} conj(d_k)|^2.
Complex best_phase(const SymmetricState& state, const std::vector<double>& signs) {
  const int n = state.n_qubits();
  Complex acc = 0.0;
  for (int k = 0; k <= n; ++k) acc += signs[static_cast<std::size_t>(k)] * state[n - k] * state[k];
  if (std::abs(acc) == 0.0) return 1.0;
  return acc / std::abs(acc);
}

double mirror_residual(const SymmetricState& state, const std::vector<double>& signs) {
  const int n = state.n_qubits();
  const Complex phase = best_phase(state, signs);
  double worst = 0.0;
  for (int k = 0; k <= n; ++k) {
    const Complex expected = signs[static_cast<std::size_t>(k)] * phase * std::conj(state[k]);
    worst = std::max(worst, std::abs(state[n - k] - expected));
  }
  return worst;
}

double cyclic_residual(const SymmetricState& state, int n_fold, int n_south) {
  double worst = 0.0;
  for (int k = 0; k <= state.n_qubits(); ++k) {
    if (((k - n_south) % n_fold + n_fold) % n_fold != 0) worst = std::max(worst, std::abs(state[k]));
  }
  return worst;
}

}  // namespace

Direction root_to_direction(Complex z) {
  Direction d;
  d.theta = 2.0 * std::atan2(1.0, std::abs(z));
  double phi = -std::arg(z);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;
  d.phi = (std::abs(z) == 0.0) ? 0.0 : phi;
  return d;
}

Complex direction_to_root(const Direction& dir) {
  if (dir.theta <= 0.0) throw InputError("the North pole has no finite stereographic image");
  const double r = std::cos(dir.theta / 2.0) / std::sin(dir.theta / 2.0);
  return std::polar(r, -dir.phi);
}

Eigen::Vector3d root_to_vector(Complex z) {
  // Inverse stereographic image of z = cot(theta/2) e^{-i phi}.
  const double r2 = std::norm(z);
  const double denom = 1.0 + r2;
  return {2.0 * z.real() / denom, -2.0 * z.imag() / denom, (r2 - 1.0) / denom};
}

std::vector<Eigen::Vector3d> MajoranaConfig::unit_vectors() const {
  std::vector<Eigen::Vector3d> out;
  out.reserve(static_cast<std::size_t>(n_qubits()));
  for (int i = 0; i < n_south; ++i) out.emplace_back(0.0, 0.0, -1.0);
  for (const auto& z : roots) out.push_back(root_to_vector(z));
  for (int i = 0; i < n_north; ++i) out.emplace_back(0.0, 0.0, 1.0);
  return out;
}

std::vector<Direction> MajoranaConfig::directions() const {
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(n_qubits()));
  for (int i = 0; i < n_south; ++i) out.push_back(Direction{kPi, 0.0});
  for (const auto& z : roots) out.push_back(root_to_direction(z));
  for (int i = 0; i < n_north; ++i) out.push_back(Direction{0.0, 0.0});
  return out;
}

MajoranaConfig config_from_directions(const std::vector<Direction>& points, double pole_tol) {
  MajoranaConfig cfg;
  for (const auto& p : points) {
    if (!(p.theta >= 0.0 && p.theta <= kPi + pole_tol) || !std::isfinite(p.phi)) {
      throw InputError("theta must lie in [0, pi]");
    }
    if (p.theta <= pole_tol) {
      ++cfg.n_north;
    } else if (p.theta >= kPi - pole_tol) {
      ++cfg.n_south;
    } else {
      cfg.roots.push_back(direction_to_root(p));
    }
  }
  return cfg;
}

std::pair<int, int> pole_counts(const SymmetricState& state) {
  const int n = state.n_qubits();
  const double scale = max_amplitude(state);
  int first = 0;
  while (first <= n && is_zero_amplitude(state[first], scale)) ++first;
  int last = n;
  while (last >= 0 && is_zero_amplitude(state[last], scale)) --last;
  return {first, n - last};
}

MajoranaPolynomial majorana_polynomial(const SymmetricState& state) {
  const int n = state.n_qubits();
  MajoranaPolynomial poly;
  std::tie(poly.n_south, poly.n_north) = pole_counts(state);
  const double scale = max_amplitude(state);
  for (int k = poly.n_south; k <= n - poly.n_north; ++k) {
    const Complex d = is_zero_amplitude(state[k], scale) ? Complex(0.0) : state[k];
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    poly.coeffs.push_back(sign * std::sqrt(binomial(n, k)) * d);
  }
  return poly;
}

MajoranaConfig majorana_points(const SymmetricState& state, double tol) {
  const auto poly = majorana_polynomial(state);
  MajoranaConfig cfg;
  cfg.n_south = poly.n_south;
  cfg.n_north = poly.n_north;
  cfg.roots = polynomial_roots(poly.coeffs);
  double max_coeff = 0.0;
  for (const auto& c : poly.coeffs) max_coeff = std::max(max_coeff, std::abs(c));
  for (const auto& z : cfg.roots) {
    const double res = std::abs(scaled_eval(poly.coeffs, z));
    if (!(res < tol * max_coeff)) {
      std::ostringstream msg;
      msg << "root residual " << res << " exceeds " << tol * max_coeff << " at z = " << z;
      throw NumericalError(msg.str());
    }
  }
  return cfg;
}

SymmetricState state_from_points(const MajoranaConfig& config) {
  const int n = config.n_qubits();
  if (n < 0) throw InputError("empty configuration");
  // a[i] is the coefficient of z^i of prod (z - z_i), rescaled per factor.
  std::vector<Complex> a{1.0};
  for (const auto& z : config.roots) {
    if (z == Complex(0.0)) throw InputError("zero root must be counted as a South pole point");
    std::vector<Complex> next(a.size() + 1, 0.0);
    if (std::abs(z) <= 1.0) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        next[i + 1] += a[i];
        next[i] -= z * a[i];
      }
    } else {
      const Complex inv = 1.0 / z;
      for (std::size_t i = 0; i < a.size(); ++i) {
        next[i] += a[i];
        next[i + 1] -= inv * a[i];
      }
    }
    // Keep magnitudes bounded for long products.
    double m = 0.0;
    for (const auto& x : next) m = std::max(m, std::abs(x));
    for (auto& x : next) x /= m;
    a = std::move(next);
  }
  std::vector<Complex> d(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int k = config.n_south + static_cast<int>(i);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    d[static_cast<std::size_t>(k)] = a[i] / (sign * std::sqrt(binomial(n, k)));
  }
  return SymmetricState(std::move(d));
}

SymmetryOp SymmetryOp::rotation(int n) {
  if (n < 1) throw InputError("rotation order must be >= 1");
  return {Kind::rotation, n};
}
SymmetryOp SymmetryOp::sigma_h() { return {Kind::sigma_h, 1}; }
SymmetryOp SymmetryOp::sigma_v() { return {Kind::sigma_v, 1}; }
SymmetryOp SymmetryOp::sigma_d(int n) {
  if (n < 1) throw InputError("sigma_d order must be >= 1");
  return {Kind::sigma_d, n};
}
SymmetryOp SymmetryOp::c2x() { return {Kind::c2x, 2}; }
SymmetryOp SymmetryOp::s(int n) {
  if (n < 1) throw InputError("s_n order must be >= 1");
  return {Kind::s, n};
}

bool SymmetryOp::swaps_poles() const { return kind == Kind::sigma_h || kind == Kind::c2x || kind == Kind::s; }

Complex SymmetryOp::map(Complex z) const {
  switch (kind) {
    case Kind::rotation: return z * std::polar(1.0, -2.0 * kPi / n);
    case Kind::sigma_h: return 1.0 / std::conj(z);
    case Kind::sigma_v: return std::conj(z);
    case Kind::sigma_d: return std::conj(z) * std::polar(1.0, -kPi / n);
    case Kind::c2x: return 1.0 / z;
    case Kind::s: return std::polar(1.0, -kPi / n) / std::conj(z);
  }
  return z;
}

std::string SymmetryOp::to_string() const {
  switch (kind) {
    case Kind::rotation: return "rotation(" + std::to_string(n) + ")";
    case Kind::sigma_h: return "sigma_h";
    case Kind::sigma_v: return "sigma_v";
    case Kind::sigma_d: return "sigma_d(" + std::to_string(n) + ")";
    case Kind::c2x: return "c2x";
    case Kind::s: return "s(" + std::to_string(n) + ")";
  }
  return "?";
}

MajoranaConfig apply_symmetry(const MajoranaConfig& config, const SymmetryOp& op) {
  MajoranaConfig out;
  out.n_south = op.swaps_poles() ? config.n_north : config.n_south;
  out.n_north = op.swaps_poles() ? config.n_south : config.n_north;
  out.roots.reserve(config.roots.size());
  for (const auto& z : config.roots) out.roots.push_back(op.map(z));
  return out;
}

double config_distance(const MajoranaConfig& a, const MajoranaConfig& b) {
  return greedy_mismatch(a.unit_vectors(), b.unit_vectors());
}

bool is_invariant(const MajoranaConfig& config, const SymmetryOp& op, double tol) {
  return config_distance(apply_symmetry(config, op), config) < tol;
}

std::string GroupLabel::to_string() const {
  const std::string ns = std::to_string(n);
  switch (family) {
    case GroupFamily::none: return "none";
    case GroupFamily::C: return "C_" + ns;
    case GroupFamily::Cnh: return "C_" + ns + "h";
    case GroupFamily::Cnv: return "C_" + ns + "v";
    case GroupFamily::S2n: return "S_" + std::to_string(2 * n);
    case GroupFamily::D: return "D_" + ns;
    case GroupFamily::Dnh: return "D_" + ns + "h";
    case GroupFamily::Dnd: return "D_" + ns + "d";
  }
  return "none";
}

GroupLabel group_from_generators(int n, const SymmetryFlags& f) {
  if (n < 2) return {};
  const bool vertical = f.sigma_v || f.sigma_d;
  GroupFamily family = GroupFamily::C;
  if (f.sigma_h && (f.c2x || vertical)) {
    family = GroupFamily::Dnh;
  } else if (f.sigma_h) {
    family = GroupFamily::Cnh;
  } else if (f.s && (vertical || f.c2x)) {
    family = GroupFamily::Dnd;
  } else if (f.c2x) {
    family = GroupFamily::D;
  } else if (f.s) {
    family = GroupFamily::S2n;
  } else if (vertical) {
    family = GroupFamily::Cnv;
  }
  return {family, n};
}

SymmetryReport detect_symmetry(const MajoranaConfig& config, double tol) {
  SymmetryReport report;
  const int n_points = config.n_qubits();
  for (int n = n_points; n >= 2; --n) {
    if (is_invariant(config, SymmetryOp::rotation(n), tol)) {
      report.max_cyclic = n;
      break;
    }
  }
  const int n = report.max_cyclic;
  SymmetryFlags flags;
  const std::vector<std::pair<SymmetryOp, bool*>> candidates = {
      {SymmetryOp::sigma_h(), &flags.sigma_h},
      {SymmetryOp::sigma_v(), &flags.sigma_v},
      {SymmetryOp::sigma_d(std::max(n, 1)), &flags.sigma_d},
      {SymmetryOp::c2x(), &flags.c2x},
      {SymmetryOp::s(std::max(n, 1)), &flags.s},
  };
  for (const auto& [op, flag] : candidates) {
    if (is_invariant(config, op, tol)) {
      *flag = true;
      report.extra_ops.push_back(op);
    }
  }
  report.group = group_from_generators(n, flags);
  return report;
}

double table1_residual(const SymmetricState& state, const SymmetryOp& op) {
  const int n = state.n_qubits();
  const auto [n_south, n_north] = pole_counts(state);
  const double pole_penalty = (n_south == n_north) ? 0.0 : 1.0;
  switch (op.kind) {
    case SymmetryOp::Kind::rotation:
      return cyclic_residual(state, op.n, n_south);
    case SymmetryOp::Kind::sigma_h:
      return std::max(pole_penalty, mirror_residual(state, std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0)));
    case SymmetryOp::Kind::sigma_v:
      return imaginary_residual({state.dicke().begin(), state.dicke().end()});
    case SymmetryOp::Kind::sigma_d: {
      std::vector<Complex> w(state.dicke().begin(), state.dicke().end());
      for (int k = 0; k <= n; ++k) w[static_cast<std::size_t>(k)] *= std::polar(1.0, -k * kPi / (2.0 * op.n));
      return imaginary_residual(w);
    }
    case SymmetryOp::Kind::c2x: {
      double plus = 0.0, minus = 0.0;
      for (int k = 0; k <= n; ++k) {
        plus = std::max(plus, std::abs(state[n - k] - state[k]));
        minus = std::max(minus, std::abs(state[n - k] + state[k]));
      }
      return std::min(plus, minus);
    }
    case SymmetryOp::Kind::s: {
      const double cyclic = cyclic_residual(state, op.n, n_south);
      std::vector<double> signs(static_cast<std::size_t>(n) + 1, 1.0);
      for (int k = 0; k <= n; ++k) {
        const int offset = k - n_south;
        if (offset >= 0 && offset % op.n == 0 && (offset / op.n) % 2 == 1) signs[static_cast<std::size_t>(k)] = -1.0;
      }
      return std::max({pole_penalty, cyclic, mirror_residual(state, signs)});
    }
  }
  return std::numeric_limits<double>::infinity();
}

bool check_table1(const SymmetricState& state, const SymmetryOp& op, double tol) {
  return table1_residual(state, op) < tol;
}

GroupLabel canonical_group_form(const SymmetricState& state, double tol) {
  const int n_qubits = state.n_qubits();
  const auto [n_south, n_north] = pole_counts(state);
  const double scale = max_amplitude(state);
  int n = 0;
  int support = 0;
  for (int k = n_south; k <= n_qubits - n_north; ++k) {
    if (is_zero_amplitude(state[k], scale)) continue;
    ++support;
    n = std::gcd(n, k - n_south);
  }
  if (support <= 1) n = n_qubits;
  if (n < 2) return {};
  SymmetryFlags flags;
  flags.sigma_h = check_table1(state, SymmetryOp::sigma_h(), tol);
  flags.sigma_v = check_table1(state, SymmetryOp::sigma_v(), tol);
  flags.sigma_d = check_table1(state, SymmetryOp::sigma_d(n), tol);
  flags.c2x = check_table1(state, SymmetryOp::c2x(), tol);
  flags.s = check_table1(state, SymmetryOp::s(n), tol);
  return group_from_generators(n, flags);
}

Eigen::Vector3d barycenter(const MajoranaConfig& config) {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  const auto pts = config.unit_vectors();
  if (pts.empty()) return sum;
  for (const auto& p : pts) sum += p;
  return sum / static_cast<double>(pts.size());
}

CyclicFrame find_cyclic_frame(const MajoranaConfig& config, double tol) {
  const auto pts = config.unit_vectors();
  const int n_points = static_cast<int>(pts.size());
  std::vector<Eigen::Vector3d> axes{Eigen::Vector3d::UnitZ()};
  auto add_axis = [&axes](const Eigen::Vector3d& v) {
    if (v.norm() > 1e-8) axes.push_back(v.normalized());
  };
  for (const auto& p : pts) add_axis(p);
  for (int i = 0; i < n_points; ++i) {
    for (int j = i + 1; j < n_points; ++j) {
      add_axis(pts[static_cast<std::size_t>(i)] + pts[static_cast<std::size_t>(j)]);
      add_axis(pts[static_cast<std::size_t>(i)].cross(pts[static_cast<std::size_t>(j)]));
    }
  }
  if (n_points <= 12) {
    for (int i = 0; i < n_points; ++i) {
      for (int j = i + 1; j < n_points; ++j) {
        for (int k = j + 1; k < n_points; ++k) {
          const auto& a = pts[static_cast<std::size_t>(i)];
          const auto& b = pts[static_cast<std::size_t>(j)];
          const auto& c = pts[static_cast<std::size_t>(k)];
          add_axis((b - a).cross(c - a));
        }
      }
    }
  }
  CyclicFrame best;
  for (const auto& axis : axes) {
    const Eigen::Matrix3d to_z = Eigen::Quaterniond::FromTwoVectors(axis, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    std::vector<Eigen::Vector3d> rotated;
    rotated.reserve(pts.size());
    for (const auto& p : pts) rotated.push_back(to_z * p);
    const int order = cyclic_order(rotated, n_points, tol);
    if (order > best.n) {
      best.n = order;
      best.axis = axis;
    }
  }
  return best;
}

Eigen::Matrix2cd align_axis_operator(const Eigen::Vector3d& axis) {
  const Eigen::Vector3d a = axis.normalized();
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const double c = std::clamp(a.dot(z), -1.0, 1.0);
  Eigen::Vector3d k = a.cross(z);
  if (k.norm() < 1e-14) {
    if (c > 0.0) return Eigen::Matrix2cd::Identity();
    return rotation_operator(Eigen::Vector3d::UnitX(), kPi);
  }
  return rotation_operator(k, std::acos(c));
}

int group_order(const GroupLabel& label) {
  switch (label.family) {
    case GroupFamily::none: return 1;
    case GroupFamily::C: return label.n;
    case GroupFamily::Cnh:
    case GroupFamily::Cnv:
    case GroupFamily::S2n:
    case GroupFamily::D: return 2 * label.n;
    case GroupFamily::Dnh:
    case GroupFamily::Dnd: return 4 * label.n;
  }
  return 1;
}

PointGroupResult detect_point_group(const MajoranaConfig& config, double tol) {
  PointGroupResult best;
  best.frame = find_cyclic_frame(config, std::max(tol, 1e-9));
  const Eigen::Quaterniond to_z = Eigen::Quaterniond::FromTwoVectors(best.frame.axis.normalized(), Eigen::Vector3d::UnitZ());
  std::vector<Direction> dirs;
  for (const auto& v : config.unit_vectors()) dirs.push_back(Direction::from_vector(to_z * v));

  // A mirror plane or perpendicular 2-fold axis at azimuth a sends phi to
  // 2a - phi, so a = (phi_i + phi_j) / 2 for some pair of off-axis points.
  const double period = kPi / std::max(best.frame.n, 1);
  std::vector<double> azimuths{0.0};
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i].theta < 1e-9 || dirs[i].theta > kPi - 1e-9) continue;
    for (std::size_t j = i; j < dirs.size(); ++j) {
      if (dirs[j].theta < 1e-9 || dirs[j].theta > kPi - 1e-9) continue;
      azimuths.push_back(std::fmod(std::fmod((dirs[i].phi + dirs[j].phi) / 2.0, period) + period, period));
    }
  }
  std::sort(azimuths.begin(), azimuths.end());
  azimuths.erase(std::unique(azimuths.begin(), azimuths.end(), [](double a, double b) { return b - a < 1e-9; }),
                 azimuths.end());

  bool first = true;
  for (const double a : azimuths) {
    std::vector<Direction> rotated = dirs;
    for (auto& d : rotated) d.phi -= a;
    const auto report = detect_symmetry(config_from_directions(rotated, 1e-9), tol);
    if (first || group_order(report.group) > group_order(best.report.group)) {
      best.report = report;
      best.azimuth = a;
      first = false;
    }
  }
  return best;
}

}  // namespace aclab
