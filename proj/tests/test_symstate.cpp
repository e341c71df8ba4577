#include "doctest.h"

#include <cmath>

#include "aclab/errors.hpp"
#include "aclab/symstate.hpp"
#include "oracles.hpp"

using namespace aclab;

namespace {

SymmetricState bell() { return SymmetricState({1.0, 0.0, 1.0}); }

// N-qubit <S_z^q> rebuilt from rho_t alone (q <= t): expand (sum_i sigma_z^i)^q,
// collapse sigma^2 = 1, and count words with q! [x^q] sinh^m cosh^{N-m}.
double sz_moment_from_reduced(const DensityMatrix& rho, int n, int q) {
  const int t = rho.dim() - 1;
  std::vector<double> sinh_s(q + 1, 0.0), cosh_s(q + 1, 0.0);
  double fact = 1.0;
  for (int p = 0; p <= q; ++p) {
    if (p > 0) fact *= p;
    (p % 2 ? sinh_s : cosh_s)[p] = 1.0 / fact;
  }
  auto mul = [q](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(q + 1, 0.0);
    for (int i = 0; i <= q; ++i)
      for (int j = 0; i + j <= q; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  double total = 0.0;
  for (int m = 0; m <= std::min(q, n); ++m) {
    std::vector<double> series(q + 1, 0.0);
    series[0] = 1.0;
    for (int i = 0; i < m; ++i) series = mul(series, sinh_s);
    for (int i = 0; i < n - m; ++i) series = mul(series, cosh_s);
    if (series[q] == 0.0) continue;
    // <sigma_z on m fixed qubits> from the Dicke-basis diagonal of rho_t
    double e_m = 0.0;
    for (int l = 0; l <= t; ++l) {
      double avg = 0.0;
      for (int a = 0; a <= std::min(l, m); ++a) {
        if (l - a > t - m) continue;
        avg += binomial(m, a) * binomial(t - m, l - a) * (a % 2 ? -1.0 : 1.0);
      }
      e_m += rho(l, l).real() * avg / binomial(t, l);
    }
    total += binomial(n, m) * fact * series[q] * e_m;
  }
  return total / std::pow(2.0, q);
}

}  // namespace

TEST_CASE("construction normalizes and rejects empty input") {
  const SymmetricState s({1.0, 0.0, 1.0});
  CHECK(std::abs(s[0] - Complex(1 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(s[2] - Complex(1 / std::sqrt(2.0))) < 1e-15);
  const SymmetricState single({0.0, 0.0, 2.0});
  CHECK(std::abs(single[2] - 1.0) < 1e-15);
  CHECK_THROWS_AS(SymmetricState({0.0, 0.0}), ZeroStateError);
  CHECK_THROWS_AS(SymmetricState(std::vector<Complex>{}), InputError);

  const double r7 = std::sqrt(7.0), r11 = std::sqrt(11.0);
  std::vector<Complex> ico(13, 0.0);
  ico[1] = r7;
  ico[6] = r11;
  ico[11] = -r7;
  const SymmetricState s_ico(ico);
  CHECK(std::abs(s_ico[1].real() - r7 / 5) < 1e-15);
  CHECK(std::abs(s_ico[11].real() + r7 / 5) < 1e-15);
}

TEST_CASE("A(q) is the exact mean of m^q over m = j..-j") {
  CHECK(a_moment(4, 2) == 2);
  CHECK(a_moment(7, 3) == 0);
  CHECK(a_moment(6, 4) == 28);
  for (int n = 1; n <= 30; ++n) {
    CHECK(a_moment(n, 0) == 1);
    Rational expected(n * (n + 2), 12);
    expected.canonicalize();
    CHECK(a_moment(n, 2) == expected);
    CHECK(a_moment(n, 5) == 0);
  }
}

TEST_CASE("ladder elements match dense raising-operator powers") {
  for (int n : {2, 5, 8}) {
    const auto ops = oracle::spin_ops(n);
    const Eigen::MatrixXcd jp = ops.jx + Complex(0, 1) * ops.jy;
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n + 1, n + 1);
    for (int r = 1; r <= n; ++r) {
      power = power * jp;
      for (int k = 0; k + r <= n; ++k) {
        CHECK(ladder_element(n, k, r) == doctest::Approx(std::abs(power(k, k + r))).epsilon(1e-12));
      }
    }
  }
  CHECK(ladder_element(2, 0, 2) == doctest::Approx(2.0));
  for (int k = 0; k < 9; ++k) {
    CHECK(ladder_element(9, k, 1) == doctest::Approx(std::sqrt((9.0 - k) * (k + 1))));
    if (k < 8) CHECK(ladder_element(9, k, 2) == doctest::Approx(std::sqrt((9.0 - k) * (8.0 - k) * (k + 1) * (k + 2))));
  }
  CHECK_THROWS_AS(ladder_element(4, 3, 2), IndexError);
}

TEST_CASE("expectation_srz agrees with dense <S_z^q S_+^r>") {
  CHECK(std::abs(expectation_srz(bell(), 0, 1)) < 1e-15);
  CHECK(expectation_srz(dicke_state(4, 0), 0, 1).real() == doctest::Approx(2.0));
  const SymmetricState tetra({1.0, 0.0, 0.0, std::sqrt(2.0), 0.0});
  CHECK(expectation_srz(tetra, 0, 2).real() == doctest::Approx(2.0));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 7;
    const auto s = oracle::random_state(rng, n);
    const auto ops = oracle::spin_ops(n);
    const Eigen::MatrixXcd jp = ops.jx + Complex(0, 1) * ops.jy;
    const Eigen::VectorXcd v = s.as_vector();
    for (int r = 0; r <= std::min(3, n); ++r) {
      for (int q = 0; q <= 3; ++q) {
        Eigen::VectorXcd w = v;
        for (int i = 0; i < r; ++i) w = jp * w;
        for (int i = 0; i < q; ++i) w = ops.jz * w;
        const Complex dense = v.dot(w);
        CHECK(std::abs(expectation_srz(s, r, q) - dense) < 1e-10 * std::max(1.0, std::abs(dense)));
      }
    }
  }
}

TEST_CASE("reduced density matrices match the brute-force partial trace") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 2; ++trial) {
      const auto s = oracle::random_state(rng, n);
      for (int t = 1; t <= n; ++t) {
        const auto rho = reduced_density(s, t);
        const Eigen::MatrixXcd ref = oracle::brute_force_reduced(s, t);
        CHECK((rho.matrix() - ref).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
  const auto rho_bell = reduced_density(bell(), 1);
  CHECK(rho_bell.deviation_from_maximally_mixed() < 1e-15);
  const auto rho_prod = reduced_density(dicke_state(2, 0), 1);
  CHECK(std::abs(rho_prod(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(rho_prod(1, 1)) < 1e-15);
  const SymmetricState octa({0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0});
  CHECK(reduced_density(octa, 3).deviation_from_maximally_mixed() < 1e-14);
  CHECK_THROWS_AS(reduced_density(octa, 0), IndexError);
  CHECK_THROWS_AS(reduced_density(octa, 7), IndexError);
}

TEST_CASE("rho_t is a unit-trace PSD matrix and fixes the low S_z moments") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 11;
    const auto s = oracle::random_state(rng, n);
    const int t = 1 + trial % n;
    const auto rho = reduced_density(s, t);
    CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-12);
    CHECK((rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(rho.eigenvalues().minCoeff() > -1e-12);
    for (int q = 0; q <= t; ++q) {
      const double from_rho = sz_moment_from_reduced(rho, n, q);
      const double direct = expectation_srz(s, 0, q).real();
      CHECK(std::abs(from_rho - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("entanglement entropy") {
  CHECK(entanglement_entropy(bell(), 1) == doctest::Approx(std::log(2.0)));
  CHECK(entanglement_entropy(dicke_state(2, 0), 1) == doctest::Approx(0.0));
  std::vector<Complex> ico(13, 0.0);
  ico[1] = std::sqrt(7.0);
  ico[6] = std::sqrt(11.0);
  ico[11] = -std::sqrt(7.0);
  CHECK(entanglement_entropy(SymmetricState(ico), 5) == doctest::Approx(std::log(6.0)).epsilon(1e-12));
}

TEST_CASE("local operators act like the tensor power on the qubit vector") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int n : {1, 3, 6, 8}) {
    const auto s = oracle::random_state(rng, n);
    Eigen::Matrix2cd a;
    a << Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
    const auto out = apply_local_operator(s, a);
    // Apply A to each qubit of the full vector.
    Eigen::VectorXcd psi = oracle::qubit_vector(s);
    for (int qb = 0; qb < n; ++qb) {
      Eigen::VectorXcd next = Eigen::VectorXcd::Zero(psi.size());
      for (int b = 0; b < psi.size(); ++b) {
        const int bit = (b >> qb) & 1;
        for (int nb = 0; nb < 2; ++nb) next(b ^ ((bit ^ nb) << qb)) += a(nb, bit) * psi(b);
      }
      psi = next;
    }
    psi.normalize();
    const Eigen::VectorXcd ref_full = oracle::qubit_vector(out);
    const Complex ov = ref_full.dot(psi);
    CHECK(std::abs(std::abs(ov) - 1.0) < 1e-10);
  }
  CHECK_THROWS(apply_local_operator(bell(), Eigen::Matrix2cd::Zero()));
}

TEST_CASE("rotations: SU(2) and SO(3) forms agree on the Bloch vector") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Vector3d axis = oracle::random_direction(rng);
    const double angle = 0.3 + trial;
    const Eigen::Matrix2cd u = rotation_operator(axis, angle);
    CHECK((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    // Spin-1/2 coherent state along v rotates to R v.
    const Eigen::Vector3d v = oracle::random_direction(rng);
    const double th = std::acos(v.z()), ph = std::atan2(v.y(), v.x());
    Eigen::Vector2cd ket(std::cos(th / 2), std::polar(std::sin(th / 2), ph));
    ket = u * ket;
    const Eigen::Vector3d bloch(2 * (std::conj(ket(0)) * ket(1)).real(), 2 * (std::conj(ket(0)) * ket(1)).imag(),
                                std::norm(ket(0)) - std::norm(ket(1)));
    CHECK((bloch - rotation_matrix(axis, angle) * v).norm() < 1e-12);
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(10, 3) == 120.0);
  CHECK(binomial(5, 7) == 0.0);
  CHECK(log_binomial(200, 100) == doctest::Approx(std::lgamma(201.0) - 2 * std::lgamma(101.0)).epsilon(1e-12));
}
