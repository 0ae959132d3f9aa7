#include <chibound/clique.hpp>
#include <chibound/colorers.hpp>
#include <chibound/detect.hpp>
#include <chibound/gen.hpp>
#include <chibound/oracle.hpp>

#include <benchmark/benchmark.h>

using namespace chibound;

namespace {

auto member(GraphClass cls, int n) -> Graph
{
    return grow_in_class(n, 0.6, forbidden_patterns(cls), 12345);
}

void bm_color(benchmark::State & state, GraphClass cls)
{
    auto g = member(cls, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(color_in_class(g, cls));
}

void bm_max_clique(benchmark::State & state)
{
    auto g = member(GraphClass::diamond_free, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_clique(g));
}

void bm_membership(benchmark::State & state)
{
    auto g = member(GraphClass::gem_free, static_cast<int>(state.range(0)));
    auto forbidden = forbidden_patterns(GraphClass::gem_free);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_in_class(g, forbidden));
}

void bm_oracle(benchmark::State & state)
{
    auto g = member(GraphClass::butterfly_free, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number(g));
}

}

BENCHMARK_CAPTURE(bm_color, gem, GraphClass::gem_free)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(bm_color, butterfly, GraphClass::butterfly_free)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(bm_color, diamond, GraphClass::diamond_free)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_max_clique)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_membership)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_oracle)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK_MAIN();
