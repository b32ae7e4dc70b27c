#include <benchmark/benchmark.h>

#include <stirlingkit/expr.hpp>
#include <stirlingkit/identities.hpp>

using namespace stirlingkit;

static void BM_RunAll(benchmark::State &state)
{
    SuiteOptions options;
    options.max_n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_all(options));
    }
}
BENCHMARK(BM_RunAll)->Arg(5)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ParseEval(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval("sum(k=0..30, S(30,k)*(-1)^k*fact(k)*H(k))"));
    }
}
BENCHMARK(BM_ParseEval);
