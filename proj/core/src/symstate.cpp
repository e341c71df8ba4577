#include "aclab/symstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aclab/errors.hpp"

namespace aclab {

SymmetricState::SymmetricState(std::vector<Complex> dicke) : dicke_(std::move(dicke)) {
  if (dicke_.empty()) throw InputError("state needs at least one Dicke amplitude");
  double norm2 = 0.0;
  for (const auto& d : dicke_) {
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) {
      throw InputError("non-finite Dicke amplitude");
    }
    norm2 += std::norm(d);
  }
  if (norm2 == 0.0) throw ZeroStateError("all Dicke amplitudes are zero");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& d : dicke_) d *= scale;
}

Complex SymmetricState::spin_coefficient(int two_m) const {
  const int n = n_qubits();
  if (std::abs(two_m) > n || (n - two_m) % 2 != 0) throw IndexError("m out of range");
  return dicke_[static_cast<std::size_t>((n - two_m) / 2)];
}

Eigen::VectorXcd SymmetricState::as_vector() const {
  return Eigen::Map<const Eigen::VectorXcd>(dicke_.data(), static_cast<Eigen::Index>(dicke_.size()));
}

SymmetricState new_state(std::vector<Complex> dicke) { return SymmetricState(std::move(dicke)); }

SymmetricState dicke_state(int n_qubits, int k) {
  if (n_qubits < 0 || k < 0 || k > n_qubits) throw IndexError("Dicke index out of range");
  std::vector<Complex> d(static_cast<std::size_t>(n_qubits) + 1, 0.0);
  d[static_cast<std::size_t>(k)] = 1.0;
  return SymmetricState(std::move(d));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double DensityMatrix::deviation_from_maximally_mixed() const {
  const double target = 1.0 / static_cast<double>(dim());
  double worst = 0.0;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      const Complex expected = (i == j) ? Complex(target) : Complex(0.0);
      worst = std::max(worst, std::abs(entries_(i, j) - expected));
    }
  }
  return worst;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

Rational a_moment(int n_qubits, int q) {
  if (n_qubits < 0 || q < 0) throw IndexError("a_moment needs N >= 0 and q >= 0");
  BigInt sum = 0;
  for (int k = 0; k <= n_qubits; ++k) sum += pow(BigInt(n_qubits - 2 * k), static_cast<unsigned>(q));
  Rational result(sum, pow(BigInt(2), static_cast<unsigned>(q)) * (n_qubits + 1));
  result.canonicalize();
  return result;
}

double ladder_element(int n_qubits, int k, int r) {
  if (r < 0 || k < 0 || k + r > n_qubits) throw IndexError("ladder element needs 0 <= k <= N - r");
  double product = 1.0;
  for (int j = 0; j < r; ++j) {
    product *= std::sqrt(static_cast<double>(k + j + 1) * static_cast<double>(n_qubits - k - j));
  }
  return product;
}

namespace {

// (N/2 - k)^q evaluated exactly, rounded once.
std::vector<double> sz_powers(int n, int q) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  const BigInt denom = pow(BigInt(2), static_cast<unsigned>(q));
  for (int k = 0; k <= n; ++k) {
    Rational v(pow(BigInt(n - 2 * k), static_cast<unsigned>(q)), denom);
    out[static_cast<std::size_t>(k)] = v.get_d();
  }
  return out;
}

}  // namespace

Complex expectation_srz(const SymmetricState& state, int r, int q) {
  const int n = state.n_qubits();
  if (r < 0 || r > n || q < 0) throw IndexError("expectation_srz needs 0 <= r <= N and q >= 0");
  // phi = S_z^q S_+^r psi, applying one ladder step at a time; S_+ lowers k.
  std::vector<Complex> phi(state.dicke().begin(), state.dicke().end());
  for (int step = 0; step < r; ++step) {
    std::vector<Complex> next(phi.size(), 0.0);
    for (int k = 1; k <= n; ++k) {
      next[static_cast<std::size_t>(k - 1)] =
          std::sqrt(static_cast<double>(k) * static_cast<double>(n - k + 1)) * phi[static_cast<std::size_t>(k)];
    }
    phi = std::move(next);
  }
  const auto powers = sz_powers(n, q);
  Complex sum = 0.0;
  for (int k = 0; k + r <= n; ++k) {
    sum += std::conj(state[k]) * powers[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(k)];
  }
  if (r == 0) sum.imag(0.0);
  return sum;
}

namespace {

// sqrt of the hypergeometric weight C(k,l) C(N-k,t-l) / C(N,t).
double sqrt_weight(int n, int t, int k, int l) {
  const double num = binomial(k, l) * binomial(n - k, t - l);
  const double den = binomial(n, t);
  if (std::isfinite(num) && std::isfinite(den) && den > 0.0) return std::sqrt(num / den);
  return std::exp(0.5 * (log_binomial(k, l) + log_binomial(n - k, t - l) - log_binomial(n, t)));
}

}  // namespace

DensityMatrix reduced_density(const SymmetricState& state, int t) {
  const int n = state.n_qubits();
  if (t < 1 || t > n) throw IndexError("reduced_density needs 1 <= t <= N");
  const int env = n - t;
  // psi(l, j): amplitude on |D_t^l> (x) |D_{N-t}^j>.
  Eigen::MatrixXcd psi(t + 1, env + 1);
  for (int l = 0; l <= t; ++l) {
    for (int j = 0; j <= env; ++j) {
      const int k = l + j;
      psi(l, j) = state[k] * sqrt_weight(n, t, k, l);
    }
  }
  Eigen::MatrixXcd rho = psi * psi.adjoint();
  return DensityMatrix(std::move(rho));
}

double entanglement_entropy(const SymmetricState& state, int t) {
  const auto eigenvalues = reduced_density(state, t).eigenvalues();
  double entropy = 0.0;
  for (const double lambda : eigenvalues) {
    if (lambda > 1e-14) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

SymmetricState apply_local_operator(const SymmetricState& state, const Eigen::Matrix2cd& op) {
  // The state is the homogeneous form f(x, y) = sum_k d_k sqrt(C(N,k)) x^{N-k} y^k;
  // op^{(x)N} acts as f(x, y) -> f(a x + c y, b x + d y).
  const int n = state.n_qubits();
  const Complex a = op(0, 0), b = op(0, 1), c = op(1, 0), d = op(1, 1);
  const auto size = static_cast<std::size_t>(n) + 1;

  // xpow[m][i]: coefficient of y^i in (a x + c y)^m; likewise ypow for (b x + d y).
  std::vector<std::vector<Complex>> xpow(size), ypow(size);
  xpow[0] = {1.0};
  ypow[0] = {1.0};
  for (std::size_t m = 1; m < size; ++m) {
    xpow[m].assign(m + 1, 0.0);
    ypow[m].assign(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      xpow[m][i] += a * xpow[m - 1][i];
      xpow[m][i + 1] += c * xpow[m - 1][i];
      ypow[m][i] += b * ypow[m - 1][i];
      ypow[m][i + 1] += d * ypow[m - 1][i];
    }
  }

  std::vector<Complex> out(size, 0.0);
  for (int k = 0; k <= n; ++k) {
    const Complex g = state[k] * std::sqrt(binomial(n, k));
    if (g == Complex(0.0)) continue;
    const auto& px = xpow[static_cast<std::size_t>(n - k)];
    const auto& py = ypow[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < px.size(); ++i) {
      for (std::size_t j = 0; j < py.size(); ++j) out[i + j] += g * px[i] * py[j];
    }
  }
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] /= std::sqrt(binomial(n, k));
  return SymmetricState(std::move(out));
}

Eigen::Matrix2cd rotation_operator(const Eigen::Vector3d& axis, double angle) {
  const Eigen::Vector3d u = axis.normalized();
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd out;
  out(0, 0) = c - i * s * u.z();
  out(0, 1) = -i * s * Complex(u.x(), -u.y());
  out(1, 0) = -i * s * Complex(u.x(), u.y());
  out(1, 1) = c + i * s * u.z();
  return out;
}

Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

}  // namespace aclab
