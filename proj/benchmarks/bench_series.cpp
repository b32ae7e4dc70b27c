#include <benchmark/benchmark.h>

#include <stirlingkit/egf.hpp>
#include <stirlingkit/seq.hpp>
#include <stirlingkit/transform.hpp>

using namespace stirlingkit;

static void BM_Compose(benchmark::State &state)
{
    const long order = state.range(0);
    const Egf outer = egf_elementary(ElementaryKind::exp, order);
    const Egf inner = egf_elementary(ElementaryKind::expm1, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(egf_compose(outer, inner));
    }
}
BENCHMARK(BM_Compose)->Arg(12)->Arg(32)->Arg(64);

static void BM_Reciprocal(benchmark::State &state)
{
    const Egf f = egf_elementary(ElementaryKind::exp, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(egf_reciprocal(f));
    }
}
BENCHMARK(BM_Reciprocal)->Arg(12)->Arg(64);

static void BM_StirlingRoundTrip(benchmark::State &state)
{
    SeqContext ctx;
    std::vector<Rational> a;
    for (long i = 0; i < state.range(0); ++i) {
        a.push_back(Rational(Integer(i % 7 - 3), Integer(i % 5 + 1)));
    }
    const Sequence seq(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stirling_inverse(ctx, stirling_transform(ctx, seq)));
    }
}
BENCHMARK(BM_StirlingRoundTrip)->Arg(25)->Arg(100);
