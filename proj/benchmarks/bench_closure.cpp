#include "normfilt/filtration.hpp"
#include "normfilt/hilbert.hpp"
#include "normfilt/integral_closure.hpp"

#include <benchmark/benchmark.h>

using namespace normfilt;

namespace {

MonomialIdeal sample_ideal(std::size_t dim) {
    if (dim == 2) {
        return MonomialIdeal::minimalize({{4, 0}, {3, 1}, {1, 2}, {0, 5}}, 2);
    }
    return MonomialIdeal::minimalize({{3, 0, 0}, {0, 3, 0}, {0, 0, 2}, {1, 1, 1}}, 3);
}

} // namespace

static void BM_MembershipLP(benchmark::State& state) {
    const NewtonPolyhedron np(sample_ideal(3));
    const ExponentVector a{4, 3, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(np.contains(a, 3));
    }
}
BENCHMARK(BM_MembershipLP);

static void BM_ClosurePower(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const NewtonPolyhedron np(sample_ideal(dim));
    const auto n = static_cast<Exponent>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_closure_power(np, n));
    }
}
BENCHMARK(BM_ClosurePower)->Args({2, 4})->Args({2, 8})->Args({3, 2})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_HICheck(benchmark::State& state) {
    const auto base = MonomialIdeal::parameter(std::vector<Exponent>{2, 3, 3});
    for (auto _ : state) {
        ClosureCache cache(base);
        benchmark::DoNotOptimize(hi_check(cache, 1, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_HICheck)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_NormalTable(benchmark::State& state) {
    for (auto _ : state) {
        ClosureCache cache(sample_ideal(2));
        benchmark::DoNotOptimize(normal_table(cache, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_NormalTable)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
