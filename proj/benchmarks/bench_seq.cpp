#include <benchmark/benchmark.h>

#include <stirlingkit/poly.hpp>
#include <stirlingkit/seq.hpp>

using namespace stirlingkit;

static void BM_Stirling2Triangle(benchmark::State &state)
{
    const long n = state.range(0);
    for (auto _ : state) {
        SeqContext ctx;
        benchmark::DoNotOptimize(ctx.stirling2_row(n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Stirling2Triangle)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_Bernoulli(benchmark::State &state)
{
    const long n = state.range(0);
    for (auto _ : state) {
        SeqContext ctx;
        benchmark::DoNotOptimize(ctx.bernoulli(n));
    }
}
BENCHMARK(BM_Bernoulli)->Arg(20)->Arg(60)->Arg(120);

static void BM_MomentRecurrence(benchmark::State &state)
{
    for (auto _ : state) {
        SeqContext ctx;
        benchmark::DoNotOptimize(ctx.moment(20, state.range(0)));
    }
}
BENCHMARK(BM_MomentRecurrence)->Arg(4)->Arg(8);

static void BM_EulerPolys(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_polys(state.range(0)));
    }
}
BENCHMARK(BM_EulerPolys)->Arg(15)->Arg(30);
