#include <benchmark/benchmark.h>

#include "tiltrich/qbgraph.hpp"
#include "tiltrich/quantumschub.hpp"
#include "tiltrich/rpolyhecke.hpp"
#include "tiltrich/varietylab.hpp"

using namespace tiltrich;

static void BM_DistancesFrom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qbg(n);
    const Permutation u = Permutation::longest(n);
    for (auto _ : state) {
        clear_distance_cache();
        benchmark::DoNotOptimize(distances_from(u));
    }
}
BENCHMARK(BM_DistancesFrom)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_MinDegreeAllPairs(benchmark::State& state) {
    const auto all = Permutation::all(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& u : all)
            for (const auto& v : all) benchmark::DoNotOptimize(min_degree(u, v));
}
BENCHMARK(BM_MinDegreeAllPairs)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_RtiltRecursive(benchmark::State& state) {
    const Permutation u = Permutation::parse("512346");
    const Permutation v = Permutation::parse("246513");
    for (auto _ : state) {
        clear_rpoly_caches();
        benchmark::DoNotOptimize(rtilt_recursive(u, v));
    }
}
BENCHMARK(BM_RtiltRecursive)->Unit(benchmark::kMillisecond);

static void BM_RtiltDeodhar(benchmark::State& state) {
    const Permutation u = Permutation::parse("512346");
    const Permutation v = Permutation::parse("246513");
    for (auto _ : state) {
        clear_rpoly_caches();
        benchmark::DoNotOptimize(rtilt_deodhar(u, v));
    }
}
BENCHMARK(BM_RtiltDeodhar)->Unit(benchmark::kMillisecond);

static void BM_CountPoints(benchmark::State& state) {
    const Permutation u = Permutation::parse("2413");
    const Permutation v = Permutation::parse("1234");
    const long long p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_points_fq(u, v, p));
}
BENCHMARK(BM_CountPoints)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PathSchubert(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Permutation u = Permutation::long_cycle(n);
    const Permutation v = Permutation::identity(n);
    for (auto _ : state) {
        clear_distance_cache();
        clear_schubert_caches();
        benchmark::DoNotOptimize(path_schubert(u, v));
    }
}
BENCHMARK(BM_PathSchubert)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_GwMinDegree(benchmark::State& state) {
    const Permutation u = Permutation::parse("3412");
    const Permutation v = Permutation::parse("1243");
    for (auto _ : state) benchmark::DoNotOptimize(gw_min_degree(u, v));
}
BENCHMARK(BM_GwMinDegree)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
