#include "fisherwit/states.hpp"
#include "fisherwit/sweeps.hpp"
#include "fisherwit/witness.hpp"

#include <benchmark/benchmark.h>

using namespace fisherwit;

static void BM_HermitianEig(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ComplexMatrix m = ComplexMatrix::Random(n, n);
    m = (m + m.adjoint()).eval();
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_QfiMatrixCat(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    const DensityMatrix rho = dephased_cat(1.0, 0.5, cutoff).rho;
    const LocalOperatorSet set = quadrature_set({cutoff, cutoff});
    for (auto _ : state) benchmark::DoNotOptimize(qfi_matrix(rho, set));
}
BENCHMARK(BM_QfiMatrixCat)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_QfiMatrixMixedQubits(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_separable(HilbertStructure(std::vector<int>(n, 2)), 64, 7);
    const LocalOperatorSet set = spin_set(n);
    for (auto _ : state) benchmark::DoNotOptimize(qfi_matrix(rho, set));
}
BENCHMARK(BM_QfiMatrixMixedQubits)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_ConstrainedMaxGhz(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = ghz_weighted(n, 0.3).density();
    const LocalOperatorSet set = spin_set(n);
    for (auto _ : state) benchmark::DoNotOptimize(constrained_qfi_max(rho, set));
}
BENCHMARK(BM_ConstrainedMaxGhz)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Fig1Point(benchmark::State& state) {
    const std::vector<double> s{0.3};
    SweepOptions opts;
    opts.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_fig1(1.0, s, 24, opts));
}
BENCHMARK(BM_Fig1Point)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
