#include <array>

#include <benchmark/benchmark.h>

#include <quadfact/quadfact.hpp>

using namespace quadfact;

namespace {

QuadInt q(Int a, Int b) { return QuadInt(a, b, kMinusFive); }

void BM_IdealFromGenerators(benchmark::State& state) {
    const std::array<QuadInt, 3> gens{q(1980, 0), q(17, 23), q(-41, 9)};
    for (auto _ : state) benchmark::DoNotOptimize(ideal_from_generators(gens));
}
BENCHMARK(BM_IdealFromGenerators);

void BM_IdealMultiply(benchmark::State& state) {
    const std::array<QuadInt, 2> g1{q(3, 0), q(1, 2)};
    const std::array<QuadInt, 2> g2{q(29, 0), q(3, 2)};
    const QuadIdeal I = *ideal_from_generators(g1);
    const QuadIdeal J = *ideal_from_generators(g2);
    for (auto _ : state) benchmark::DoNotOptimize(I * J);
}
BENCHMARK(BM_IdealMultiply);

void BM_IdealDivide(benchmark::State& state) {
    const std::array<QuadInt, 2> g1{q(3, 0), q(1, 2)};
    const std::array<QuadInt, 2> g2{q(29, 0), q(3, 2)};
    const QuadIdeal I = *ideal_from_generators(g1);
    const QuadIdeal J = *ideal_from_generators(g2);
    const QuadIdeal IJ = I * J;
    for (auto _ : state) benchmark::DoNotOptimize(divide(IJ, J));
}
BENCHMARK(BM_IdealDivide);

void BM_FactorIdeal(benchmark::State& state) {
    const QuadIdeal I = principal_ideal(q(state.range(0), 1));
    for (auto _ : state) benchmark::DoNotOptimize(factor_ideal(I));
}
BENCHMARK(BM_FactorIdeal)->Arg(1)->Arg(1000)->Arg(9999);

void BM_SqrtMinusFiveModP(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_minus_five_mod(1'000'000'007));
}
BENCHMARK(BM_SqrtMinusFiveModP);

}  // namespace
