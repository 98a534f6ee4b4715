#include <array>

#include <benchmark/benchmark.h>

#include <quadfact/quadfact.hpp>

using namespace quadfact;

namespace {

void BM_EnumerateFactorizations(benchmark::State& state) {
    const QuadInt x(state.range(0), 0, kMinusFive);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_factorizations(x));
}
BENCHMARK(BM_EnumerateFactorizations)->Arg(6)->Arg(1980)->Arg(2 * 3 * 7 * 23);

void BM_BruteForceFactorizations(benchmark::State& state) {
    const QuadInt x(state.range(0), 0, kMinusFive);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_factorizations(x));
}
BENCHMARK(BM_BruteForceFactorizations)->Arg(6)->Arg(210)->Arg(1980);

void BM_CountFactorizations(benchmark::State& state) {
    const QuadInt x(state.range(0), 0, kMinusFive);
    for (auto _ : state) benchmark::DoNotOptimize(count_factorizations(x));
}
BENCHMARK(BM_CountFactorizations)->Arg(1980)->Arg(2 * 3 * 7 * 23);

void BM_CountPairings(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const std::array<int, 4> m{k, k, 2 * k, 2 * k};
    for (auto _ : state) benchmark::DoNotOptimize(count_pairings(m));
}
BENCHMARK(BM_CountPairings)->Arg(1)->Arg(4)->Arg(8);

void BM_HilbertFactorizations(benchmark::State& state) {
    const HilbertElement h(611325);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_factorizations(h));
}
BENCHMARK(BM_HilbertFactorizations);

}  // namespace
