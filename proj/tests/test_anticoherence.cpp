#include "doctest.h"

#include <cmath>

#include "aclab/anticoherence.hpp"
#include "aclab/errors.hpp"
#include "aclab/search.hpp"
#include "oracles.hpp"

using namespace aclab;

namespace {

SymmetricState ghz3() { return SymmetricState({1.0, 0.0, 0.0, 1.0}); }
SymmetricState tetra() { return SymmetricState({1.0, 0.0, 0.0, std::sqrt(2.0), 0.0}); }
SymmetricState octa() { return SymmetricState({0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0}); }
SymmetricState bell() { return SymmetricState({1.0, 0.0, 1.0}); }

// Direction independence of <(J.n)^k>, k <= t, from dense matrices.
double dense_anisotropy(const SymmetricState& s, int t, std::mt19937_64& rng) {
  double worst = 0.0;
  const double scale = std::pow(std::max(1.0, s.n_qubits() / 2.0), t);
  for (int k = 1; k <= t; ++k) {
    const double ref = oracle::directional_moment(s, Eigen::Vector3d::UnitZ(), k);
    for (int d = 0; d < 6; ++d) {
      worst = std::max(worst, std::abs(oracle::directional_moment(s, oracle::random_direction(rng), k) - ref) / scale);
    }
  }
  return worst;
}

SymmetricState random_rotation(const SymmetricState& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  return apply_local_operator(s, rotation_operator(oracle::random_direction(rng), angle(rng)));
}

}  // namespace

TEST_CASE("operator-moment checks") {
  CHECK(check_operator(ghz3(), 1));
  CHECK_FALSE(check_operator(dicke_state(4, 0), 1));
  CHECK(check_operator(family_state("zimba", {{"N", 8}}), 3));
}

TEST_CASE("Dicke-coefficient checks and condition count") {
  CHECK(check_dicke(bell(), 1));
  CHECK(check_dicke(tetra(), 2));
  CHECK_FALSE(check_dicke(tetra(), 3));
  CHECK(dicke_condition_count(1) == 3);
  CHECK(dicke_condition_count(2) == 8);
  CHECK(dicke_condition_count(7) == 63);
}

TEST_CASE("reduced-state checks") {
  CHECK(check_reduced(octa(), 3));
  for (int n = 1; n <= 8; ++n) CHECK_FALSE(check_reduced(dicke_state(n, 0), 1));
  CHECK(check_reduced(family_state("d7d42"), 7, 1e-9));
  CHECK_FALSE(check_reduced(family_state("d7d42"), 8, 1e-9));
}

TEST_CASE("order of anticoherence on known states") {
  CHECK(order_of_anticoherence(bell()) == 1);
  CHECK(order_of_anticoherence(family_state("icosahedron")) == 5);
  for (const char* name : {"n5_c2_2111", "n5_c3_11111", "n5_c3_2111", "n5_c4", "n5_c5"}) {
    CAPTURE(name);
    CHECK(order_of_anticoherence(family_state(name)) == 1);
    CHECK_FALSE(check_reduced(family_state(name), 2));
  }
  CHECK(order_of_anticoherence(dicke_state(3, 1)) == 0);
  const auto report = analyze(family_state("icosahedron"));
  for (const auto m : kAllMethods) CHECK(report.order_for(m) == 5);
  CHECK(report.n_qubits == 12);
  for (double r : report.residual_next) CHECK(r > 1e-3);
}

TEST_CASE("Clebsch-Gordan values and orthonormality") {
  CHECK(clebsch_gordan(1, 1, 1, -1, 2, 0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, 1, 1, -1, 0, 0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, -1, 1, 1, 0, 0) == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(2, 2, 2, 0, 2, 2) == doctest::Approx(1 / std::sqrt(2.0)));  // <1 1;1 0|1 1>
  CHECK(clebsch_gordan(2, 0, 2, 2, 2, 2) == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, 1, 1, 1, 0, 0) == 0.0);
  // Rows of the unitary coupling matrix, here j1 = 3/2, j2 = 2.
  const int tj1 = 3, tj2 = 4;
  for (int tm = -(tj1 + tj2); tm <= tj1 + tj2; tm += 2) {
    for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
      for (int tjp = std::abs(tj1 - tj2); tjp <= tj1 + tj2; tjp += 2) {
        if (std::abs(tm) > tj || std::abs(tm) > tjp) continue;
        double sum = 0.0;
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
          const int tm2 = tm - tm1;
          if (std::abs(tm2) > tj2) continue;
          sum += clebsch_gordan(tj1, tm1, tj2, tm2, tj, tm) * clebsch_gordan(tj1, tm1, tj2, tm2, tjp, tm);
        }
        CHECK(sum == doctest::Approx(tj == tjp ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("multipole operators are orthonormal and T_1^0 is proportional to J_z") {
  const int n = 5;
  std::vector<Eigen::MatrixXd> ops;
  for (int l = 0; l <= n; ++l)
    for (int m = -l; m <= l; ++m) ops.push_back(multipole_operator(n, l, m));
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = 0; b < ops.size(); ++b)
      CHECK((ops[a].transpose() * ops[b]).trace() == doctest::Approx(a == b ? 1.0 : 0.0));
  const Eigen::MatrixXd jz = oracle::spin_ops(n).jz.real();
  const Eigen::MatrixXd t10 = multipole_operator(n, 1, 0);
  const double j = n / 2.0;
  CHECK(std::abs((t10 * jz).trace()) == doctest::Approx(std::sqrt(j * (j + 1) * (2 * j + 1) / 3)));
}

TEST_CASE("multipole coefficients") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial;
    const auto s = oracle::random_state(rng, n);
    const auto table = multipole_coeffs(s, n);
    const Eigen::VectorXcd v = s.as_vector();
    const Eigen::MatrixXcd rho = v * v.adjoint();
    double norm2 = 0.0;
    for (int l = 0; l <= n; ++l) {
      for (int m = -l; m <= l; ++m) {
        const Complex dense = (rho * multipole_operator(n, l, m).transpose().cast<Complex>()).trace();
        CHECK(std::abs(table.at(l, m) - dense) < 1e-12);
        CHECK(std::abs(table.at(l, -m) - (m % 2 ? -1.0 : 1.0) * std::conj(table.at(l, m))) < 1e-10);
        norm2 += std::norm(table.at(l, m));
      }
    }
    // Parseval: tr rho^2 = 1.
    CHECK(norm2 == doctest::Approx(1.0));
    CHECK(table.at(0, 0).real() == doctest::Approx(1 / std::sqrt(n + 1.0)));
  }
  CHECK(std::abs(multipole_coeffs(dicke_state(4, 0), 1).at(1, 0)) > 0.1);
  const auto ico = multipole_coeffs(family_state("icosahedron"), 5);
  for (int l = 1; l <= 5; ++l)
    for (int m = -l; m <= l; ++m) CHECK(std::abs(ico.at(l, m)) < 1e-10);
  const auto b = multipole_coeffs(bell(), 2);
  for (int m = -1; m <= 1; ++m) CHECK(std::abs(b.at(1, m)) < 1e-12);
  CHECK(std::abs(b.at(2, 0)) + std::abs(b.at(2, 2)) > 0.1);
  CHECK_THROWS_AS(multipole_coeffs(bell(), 3), IndexError);
  CHECK(check_multipole(octa(), 3));
  CHECK_FALSE(check_multipole(dicke_state(6, 1), 1));
  CHECK(check_multipole(family_state("zimba", {{"N", 6}}), 2));
}

TEST_CASE("certified orders agree with the dense-moment oracle") {
  std::mt19937_64 rng(17);
  const std::vector<SymmetricState> states = {bell(), ghz3(), tetra(), octa(), family_state("icosahedron"),
                                              family_state("zimba", {{"N", 8}}), family_state("n5_c4")};
  for (const auto& s : states) {
    const int order = order_of_anticoherence(s);
    CHECK(dense_anisotropy(s, order, rng) < 1e-10);
    if (order < s.n_qubits()) CHECK(dense_anisotropy(s, order + 1, rng) > 1e-6);
  }
}

TEST_CASE("four characterizations agree on random and anticoherent inputs") {
  std::mt19937_64 rng(2024);
  const std::vector<SymmetricState> seeds = {bell(), ghz3(), tetra(), octa(), family_state("icosahedron"),
                                             family_state("zimba", {{"N", 8}}), family_state("n5_c3_2111")};
  for (int trial = 0; trial < 60; ++trial) {
    const SymmetricState s = trial % 2 ? oracle::random_state(rng, 1 + trial % 12)
                                       : random_rotation(seeds[static_cast<std::size_t>(trial / 2) % seeds.size()], rng);
    for (int t = 1; t <= std::min(4, s.n_qubits()); ++t) {
      const bool r = check_reduced(s, t, 1e-9);
      CHECK(check_operator(s, t, 1e-9) == r);
      CHECK(check_dicke(s, t, 1e-9) == r);
      CHECK(check_multipole(s, t, 1e-9) == r);
      if (t > 1 && r) CHECK(check_reduced(s, t - 1, 1e-9));
    }
  }
}

TEST_CASE("order is invariant under local rotations and fixes the entropies") {
  std::mt19937_64 rng(77);
  const auto ico = family_state("icosahedron");
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = random_rotation(ico, rng);
    CHECK(order_of_anticoherence(r, 1e-9) == 5);
  }
  for (int k = 1; k <= 5; ++k) CHECK(entanglement_entropy(ico, k) == doctest::Approx(std::log(k + 1.0)).epsilon(1e-9));
}

TEST_CASE("invalid orders") {
  CHECK_THROWS_AS(check_reduced(bell(), 0), IndexError);
  CHECK_THROWS_AS(check_operator(bell(), 3), IndexError);
  CHECK_THROWS_AS(check_dicke(bell(), -1), IndexError);
}
