#include <benchmark/benchmark.h>

#include <random>

#include "aclab/anticoherence.hpp"
#include "aclab/majorana.hpp"
#include "aclab/search.hpp"
#include "aclab/symstate.hpp"

using namespace aclab;

namespace {

SymmetricState random_state(int n_qubits) {
  std::mt19937_64 rng(static_cast<unsigned>(n_qubits));
  std::normal_distribution<double> g;
  std::vector<Complex> d(static_cast<std::size_t>(n_qubits) + 1);
  for (auto& c : d) c = Complex(g(rng), g(rng));
  return SymmetricState(d);
}

void BM_LpFeasible(benchmark::State& st) {
  const int t = static_cast<int>(st.range(0));
  const int n_qubits = static_cast<int>(st.range(1));
  const int n = static_cast<int>(st.range(2));
  const auto inst = make_lp_instance(t, n_qubits, n, n_qubits % n, 0);
  for (auto _ : st) benchmark::DoNotOptimize(lp_feasible(inst));
}
BENCHMARK(BM_LpFeasible)->Args({3, 8, 4})->Args({5, 24, 6})->Args({6, 42, 7})->Args({7, 48, 8})->Args({7, 99, 9});

void BM_ScanT5(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(minimal_feasible_n(5, 30, 1));
}
BENCHMARK(BM_ScanT5)->Unit(benchmark::kMillisecond);

void BM_ReducedDensity(benchmark::State& st) {
  const auto s = random_state(static_cast<int>(st.range(0)));
  const int t = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(reduced_density(s, t));
}
BENCHMARK(BM_ReducedDensity)->Args({12, 2})->Args({12, 6})->Args({100, 4})->Args({500, 10});

void BM_CheckAll(benchmark::State& st) {
  const auto s = family_state("icosahedron");
  const auto m = static_cast<Method>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(check(m, s, 5));
}
BENCHMARK(BM_CheckAll)->DenseRange(0, 3);

void BM_MajoranaPoints(benchmark::State& st) {
  const auto s = random_state(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(majorana_points(s));
}
BENCHMARK(BM_MajoranaPoints)->Arg(5)->Arg(20)->Arg(60)->Arg(120);

void BM_GlPlan(benchmark::State& st) {
  const int t = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(gl_plan(t, gl_default_n(t)));
}
BENCHMARK(BM_GlPlan)->Arg(4)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
