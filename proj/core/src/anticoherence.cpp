#include "aclab/anticoherence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "aclab/errors.hpp"

namespace aclab {

std::string to_string(Method method) {
  switch (method) {
    case Method::spin_operator: return "operator";
    case Method::dicke: return "dicke";
    case Method::reduced: return "reduced";
    case Method::multipole: return "multipole";
  }
  return "unknown";
}

namespace {

void require_order(const SymmetricState& state, int t) {
  if (t < 1 || t > state.n_qubits()) throw IndexError("order t must satisfy 1 <= t <= N");
}

// max(1, (N/2)^p)
double magnitude_scale(int n, int p) { return std::max(1.0, std::pow(0.5 * n, p)); }

std::vector<double> half_powers(int n, int q) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  const BigInt denom = pow(BigInt(2), static_cast<unsigned>(q));
  for (int k = 0; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] =
        Rational(pow(BigInt(n - 2 * k), static_cast<unsigned>(q)), denom).get_d();
  }
  return out;
}

}  // namespace

double operator_residual(const SymmetricState& state, int t) {
  require_order(state, t);
  const int n = state.n_qubits();
  double worst = 0.0;
  for (int r = 0; r <= t; ++r) {
    for (int q = 0; q + r <= t; ++q) {
      const Complex value = expectation_srz(state, r, q);
      const double target = (r == 0) ? a_moment(n, q).get_d() : 0.0;
      worst = std::max(worst, std::abs(value - target) / magnitude_scale(n, q + r));
    }
  }
  return worst;
}

double dicke_residual(const SymmetricState& state, int t) {
  require_order(state, t);
  const int n = state.n_qubits();
  double worst = 0.0;
  for (int q = 0; q <= t; ++q) {
    const auto p = half_powers(n, q);
    double diag = 0.0;
    for (int k = 0; k <= n; ++k) diag += p[static_cast<std::size_t>(k)] * std::norm(state[k]);
    worst = std::max(worst, std::abs(diag - a_moment(n, q).get_d()) / magnitude_scale(n, q));
    for (int r = 1; r + q <= t; ++r) {
      Complex off = 0.0;
      for (int k = 0; k + r <= n; ++k) {
        off += ladder_element(n, k, r) * p[static_cast<std::size_t>(k)] * std::conj(state[k]) * state[k + r];
      }
      worst = std::max(worst, std::abs(off) / magnitude_scale(n, q + r));
    }
  }
  return worst;
}

int dicke_condition_count(int t) { return (t + 1) * (t + 1) - 1; }

double reduced_residual(const SymmetricState& state, int t) {
  require_order(state, t);
  return reduced_density(state, t).deviation_from_maximally_mixed();
}

double multipole_residual(const SymmetricState& state, int t) {
  require_order(state, t);
  const auto table = multipole_coeffs(state, t);
  double worst = 0.0;
  for (int l = 1; l <= t; ++l) {
    for (int m = -l; m <= l; ++m) worst = std::max(worst, std::abs(table.at(l, m)));
  }
  return worst;
}

double residual(Method method, const SymmetricState& state, int t) {
  switch (method) {
    case Method::spin_operator: return operator_residual(state, t);
    case Method::dicke: return dicke_residual(state, t);
    case Method::reduced: return reduced_residual(state, t);
    case Method::multipole: return multipole_residual(state, t);
  }
  throw InputError("unknown method");
}

bool check_operator(const SymmetricState& state, int t, double tol) { return operator_residual(state, t) < tol; }
bool check_dicke(const SymmetricState& state, int t, double tol) { return dicke_residual(state, t) < tol; }
bool check_reduced(const SymmetricState& state, int t, double tol) { return reduced_residual(state, t) < tol; }
bool check_multipole(const SymmetricState& state, int t, double tol) { return multipole_residual(state, t) < tol; }

bool check(Method method, const SymmetricState& state, int t, double tol) {
  return residual(method, state, t) < tol;
}

int certified_order(Method method, const SymmetricState& state, double tol) {
  int order = 0;
  for (int t = 1; t <= state.n_qubits(); ++t) {
    if (!check(method, state, t, tol)) break;
    order = t;
  }
  return order;
}

AnticoherenceReport analyze(const SymmetricState& state, double tol) {
  AnticoherenceReport report;
  report.n_qubits = state.n_qubits();
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    report.per_method[i] = certified_order(kAllMethods[i], state, tol);
  }
  if (std::adjacent_find(report.per_method.begin(), report.per_method.end(), std::not_equal_to<>()) !=
      report.per_method.end()) {
    std::ostringstream msg;
    msg << "characterizations disagree:";
    for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
      msg << ' ' << to_string(kAllMethods[i]) << '=' << report.per_method[i];
    }
    throw DiagnosticError(msg.str());
  }
  report.order = report.per_method[0];
  if (report.order < state.n_qubits()) {
    for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
      report.residual_next[i] = residual(kAllMethods[i], state, report.order + 1);
    }
  }
  return report;
}

int order_of_anticoherence(const SymmetricState& state, double tol) {
  const int order = certified_order(Method::reduced, state, tol);
  const int by_operator = certified_order(Method::spin_operator, state, tol);
  const int by_dicke = certified_order(Method::dicke, state, tol);
  if (order != by_operator || order != by_dicke) {
    std::ostringstream msg;
    msg << "order mismatch: reduced=" << order << " operator=" << by_operator << " dicke=" << by_dicke;
    throw DiagnosticError(msg.str());
  }
  return order;
}

double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  if (tm1 + tm2 != tM) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) return 0.0;
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tJ + tM) % 2 != 0) return 0.0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2 || (tj1 + tj2 + tJ) % 2 != 0) return 0.0;

  auto f = [](int twice) -> const BigInt& { return factorial(static_cast<unsigned>(twice / 2)); };
  BigInt num = BigInt(tJ + 1) * f(tJ + tj1 - tj2) * f(tJ - tj1 + tj2) * f(tj1 + tj2 - tJ) * f(tJ + tM) *
               f(tJ - tM) * f(tj1 - tm1) * f(tj1 + tm1) * f(tj2 - tm2) * f(tj2 + tm2);
  Rational prefactor(num, f(tj1 + tj2 + tJ + 2));
  prefactor.canonicalize();

  const int a = (tJ - tj2 + tm1) / 2;
  const int b = (tJ - tj1 - tm2) / 2;
  const int c = (tj1 + tj2 - tJ) / 2;
  const int d = (tj1 - tm1) / 2;
  const int e = (tj2 + tm2) / 2;
  Rational sum = 0;
  for (int k = std::max({0, -a, -b}); k <= std::min({c, d, e}); ++k) {
    BigInt den = factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(c - k)) *
                 factorial(static_cast<unsigned>(d - k)) * factorial(static_cast<unsigned>(e - k)) *
                 factorial(static_cast<unsigned>(a + k)) * factorial(static_cast<unsigned>(b + k));
    Rational term(1, den);
    term.canonicalize();
    if (k % 2 == 0) sum += term; else sum -= term;
  }
  if (sgn(sum) == 0) return 0.0;
  const Rational squared = prefactor * sum * sum;
  const double magnitude = std::sqrt(squared.get_d());
  return sgn(sum) > 0 ? magnitude : -magnitude;
}

std::size_t MultipoleTable::index(int l, int m) const {
  if (l < 0 || l > lmax_ || std::abs(m) > l) throw IndexError("multipole index out of range");
  return static_cast<std::size_t>(l * l + (m + l));
}

namespace {

// w[k] with T_l^m = sum_k w[k] |D^k><D^{k+m}|, i.e. (-1)^{j-m2} <j m1; j -m2 | l m>
// for m1 = j - k, m2 = m1 - m. Cached per (N, l, m).
const std::vector<double>& multipole_weights(int n, int l, int m) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(n, l, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    const int k2 = k + m;
    if (k2 < 0 || k2 > n) continue;
    const int two_m1 = n - 2 * k;
    const int two_m2 = n - 2 * k2;
    const int sign = (k2 % 2 == 0) ? 1 : -1;  // (-1)^{j - m2} = (-1)^{k2}
    w[static_cast<std::size_t>(k)] = sign * clebsch_gordan(n, two_m1, n, -two_m2, 2 * l, 2 * m);
  }
  return cache.emplace(key, std::move(w)).first->second;
}

}  // namespace

Eigen::MatrixXd multipole_operator(int n_qubits, int l, int m) {
  if (l < 0 || l > n_qubits || std::abs(m) > l) throw IndexError("multipole operator index out of range");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_qubits + 1, n_qubits + 1);
  const auto& w = multipole_weights(n_qubits, l, m);
  for (int k = 0; k <= n_qubits; ++k) {
    if (k + m >= 0 && k + m <= n_qubits) out(k, k + m) = w[static_cast<std::size_t>(k)];
  }
  return out;
}

MultipoleTable multipole_coeffs(const SymmetricState& state, int lmax) {
  const int n = state.n_qubits();
  if (lmax < 0 || lmax > n) throw IndexError("lmax must satisfy 0 <= lmax <= N");
  MultipoleTable table(lmax);
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const auto& w = multipole_weights(n, l, m);
      Complex sum = 0.0;
      for (int k = std::max(0, -m); k <= n && k + m <= n; ++k) {
        sum += w[static_cast<std::size_t>(k)] * state[k] * std::conj(state[k + m]);
      }
      table.at(l, m) = sum;
    }
  }
  return table;
}

}  // namespace aclab
