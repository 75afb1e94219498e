#include "indec/embeddings.hpp"
#include "indec/order.hpp"

#include <benchmark/benchmark.h>

using namespace indec;

static void BM_Multiply(benchmark::State& state)
{
    const auto p = OrderParams::thomas(4, 9);
    const OrderElement x(p, 17, -23, 5);
    const OrderElement y(p, -4, 11, 9);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply);

static void BM_CharPoly(benchmark::State& state)
{
    const auto p = OrderParams::simplest(7);
    const OrderElement x(p, 17, -23, 5);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(x));
}
BENCHMARK(BM_CharPoly);

static void BM_IsolateRoots(benchmark::State& state)
{
    const auto p = OrderParams::simplest(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(p, default_enclosure_width()));
}
BENCHMARK(BM_IsolateRoots)->Arg(1)->Arg(10)->Arg(100);

static void BM_ConjugateSigns(benchmark::State& state)
{
    const auto p = OrderParams::ennola(6);
    const OrderElement x(p, 17, -23, 5);
    for (auto _ : state) benchmark::DoNotOptimize(conjugate_signs(x));
}
BENCHMARK(BM_ConjugateSigns);
