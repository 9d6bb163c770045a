// Serial reference vs OpenMP: fraction-free elimination and the verify sweep.

#include <random>

#include <benchmark/benchmark.h>

#include <semple/kernels.hpp>
#include <semple/sweeps.hpp>

using namespace semple;

namespace {

// Square integer matrix with a few dependent rows, so the rank path is exercised.
IntegerMatrix test_matrix(std::size_t n)
{
    std::mt19937_64 g(n);
    std::uniform_int_distribution<int> entry(-50, 50);
    IntegerMatrix m(n, std::vector<Integer>(n));
    for (auto &row : m) {
        for (auto &e : row) {
            e = entry(g);
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        m[n - 1][c] = m[0][c] + 2 * m[1][c];
    }
    return m;
}

void BM_BareissSerial(benchmark::State &state)
{
    const auto m = test_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::bareiss_serial(m));
    }
}

void BM_BareissOmp(benchmark::State &state)
{
    const auto m = test_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::bareiss_omp(m));
    }
}

void BM_SweepSerial(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep_serial(SweepOptions{}));
    }
}

void BM_SweepOmp(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep_omp(SweepOptions{}));
    }
}

} // namespace

BENCHMARK(BM_BareissSerial)->Arg(16)->Arg(45)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissOmp)->Arg(16)->Arg(45)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
