#include <benchmark/benchmark.h>

#include "hgi/arrangement.hpp"
#include "hgi/buchberger.hpp"
#include "hgi/division.hpp"
#include "hgi/grid.hpp"
#include "hgi/hypergraph.hpp"
#include "hgi/ideal.hpp"
#include "hgi/minor.hpp"
#include "hgi/subsets.hpp"

namespace {

void BM_MinorExpansion3(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hgi::minor_polynomial({{1, 2, 3}, {1, 2, 3}}, 3, 6));
    }
}
BENCHMARK(BM_MinorExpansion3);

void BM_MinorExpansion4(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hgi::minor_polynomial({{1, 2, 3, 4}, {1, 2, 3, 4}}, 4, 8));
    }
}
BENCHMARK(BM_MinorExpansion4);

void BM_PolynomialProduct(benchmark::State& state) {
    hgi::Polynomial a = hgi::minor_polynomial({{1, 2, 3}, {1, 2, 3}}, 3, 6);
    hgi::Polynomial b = hgi::minor_polynomial({{1, 2, 3}, {4, 5, 6}}, 3, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PolynomialProduct);

void BM_ReduceProduct(benchmark::State& state) {
    hgi::IdealSpec spec = hgi::ideal_of(hgi::build_delta(2, 3), 3);
    hgi::Polynomial f = spec.generators[0] * spec.generators.back();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hgi::reduce(f, spec.generators));
    }
}
BENCHMARK(BM_ReduceProduct);

void BM_BuchbergerCheckGrid23(benchmark::State& state) {
    hgi::IdealSpec spec = hgi::ideal_of(hgi::build_delta(2, 3), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hgi::buchberger_check(spec.generators));
    }
}
BENCHMARK(BM_BuchbergerCheckGrid23);

void BM_BuchbergerCheckStandardFamily(benchmark::State& state) {
    hgi::IdealSpec spec = hgi::ideal_of(hgi::build_F_ijc(1, 1, 3), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hgi::buchberger_check(spec.generators));
    }
}
BENCHMARK(BM_BuchbergerCheckStandardFamily);

void BM_EnumerateMinimal(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hgi::enumerate_minimal(l));
    }
}
BENCHMARK(BM_EnumerateMinimal)->Arg(4)->Arg(5);

void BM_SampleConfiguration(benchmark::State& state) {
    hgi::GridShape shape(2, 4);
    hgi::LineArrangement arr = hgi::build_L_of_S(shape, {});
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hgi::sample_configuration(arr, 3, seed++));
    }
}
BENCHMARK(BM_SampleConfiguration);

} // namespace

BENCHMARK_MAIN();
