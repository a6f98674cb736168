#include <benchmark/benchmark.h>

#include "operadkit/algebras.hpp"
#include "operadkit/expansion.hpp"
#include "operadkit/koszul.hpp"
#include "operadkit/series.hpp"

using namespace operadkit;

static void BM_Saturation(benchmark::State& state, const char* name) {
    Presentation p = catalog(name);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dims(p, n));
}
BENCHMARK_CAPTURE(BM_Saturation, Lie, "Lie")->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Saturation, sLeib, "sLeib")->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Saturation, ComAdm, "ComAdm")->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Saturation, AssAdm, "AssAdm")->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Dual(benchmark::State& state, const char* name) {
    Presentation p = catalog(name);
    for (auto _ : state) benchmark::DoNotOptimize(dual(p));
}
BENCHMARK_CAPTURE(BM_Dual, sLeib, "sLeib");
BENCHMARK_CAPTURE(BM_Dual, sDiAss, "sDiAss")->Unit(benchmark::kMillisecond);

static void BM_SeriesInversion(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    EGF f = closed_form("sPerm", n);
    for (auto _ : state) benchmark::DoNotOptimize(invert(f, n));
}
BENCHMARK(BM_SeriesInversion)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_IdentityCheck(benchmark::State& state, const char* type) {
    AlgebraTable a = free_algebra(type, 2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_identities(a, type));
    state.counters["dim"] = static_cast<double>(a.dim());
}
BENCHMARK_CAPTURE(BM_IdentityCheck, sLeib, "sLeib")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_IdentityCheck, sDiAss, "sDiAss")->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_FreeLie(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(free_lie(k, d));
}
BENCHMARK(BM_FreeLie)->Args({2, 6})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
