#include "indec/codifferent.hpp"
#include "indec/indecomposable.hpp"

#include <benchmark/benchmark.h>

using namespace indec;

static void BM_IsIndecomposable(benchmark::State& state)
{
    const auto p = OrderParams::simplest(state.range(0));
    const auto d = closed_form_indecomposables(p).back();
    const auto x = descriptor_to_element(d);
    for (auto _ : state) benchmark::DoNotOptimize(is_indecomposable(x));
}
BENCHMARK(BM_IsIndecomposable)->Arg(2)->Arg(6)->Arg(10);

static void BM_MinTrace(benchmark::State& state)
{
    const auto p = OrderParams::thomas(4, 8);
    const auto x = descriptor_to_element(IndecDescriptor::vw(p, 0, 3));
    for (auto _ : state) benchmark::DoNotOptimize(min_trace(x, 4));
}
BENCHMARK(BM_MinTrace);

static void BM_IndecomposableClasses(benchmark::State& state)
{
    const auto p = OrderParams::ennola(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(indecomposable_classes(p));
}
BENCHMARK(BM_IndecomposableClasses)->Arg(3)->Arg(8);
