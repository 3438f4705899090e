#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "twopoint/datasets.hpp"
#include "twopoint/fitting.hpp"
#include "twopoint/lottery.hpp"
#include "twopoint/montecarlo.hpp"

using namespace twopoint;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_SampleMeans(benchmark::State& state)
{
    const Prospect x(4000, 0, 0.8);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_sample_means(x, 100, 100000, 7, exec_of(state)));
    label(state);
}

void BM_Coverage(benchmark::State& state)
{
    const Prospect x(4000, 0, 0.8);
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_coverage(x, 1955, 0.05, 20000, 7, exec_of(state)));
    label(state);
}

void BM_EvSurface(benchmark::State& state)
{
    const auto cfg = builtin_config("megamillions-2013");
    std::vector<double> js;
    std::vector<std::uint64_t> ms;
    for (int i = 0; i < 60; ++i)
        js.push_back(1.5e7 * std::pow(1.07, i));
    for (int i = 0; i < 40; ++i)
        ms.push_back(std::uint64_t(1e5 * std::pow(1.2, i)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ev_surface(cfg, js, ms, {30, 0.02}, 0.4, exec_of(state)));
    label(state);
}

void BM_FitGrid(benchmark::State& state)
{
    const auto pts = load_jackpot_growth();
    for (auto _ : state)
        benchmark::DoNotOptimize(jackpot_grid(pts, GrowthFamily::Logistic, {}, exec_of(state)));
    label(state);
}

}  // namespace

BENCHMARK(BM_SampleMeans)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Coverage)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvSurface)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
