#include <benchmark/benchmark.h>

#include "hyperlink/channel_sim.hpp"
#include "hyperlink/link_model.hpp"
#include "hyperlink/scenarios.hpp"
#include "hyperlink/techmatrix.hpp"

namespace {

using namespace hyperlink;

void BM_Throughput(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    OfdmConfig cfg{n, 1e-6, 5e9, 1.0, 1e-5};
    const auto mob = MobilityProfile::from_speed(1000.0 / 3.0, 5e9);
    const auto fading = FadingProfile::flat(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(throughput(cfg, mob, fading).total_bps);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Throughput)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_IciPowerSingleSubcarrier(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    OfdmConfig cfg{n, 1e-6, 5e9, 1.0, 1e-5};
    const auto mob = MobilityProfile::from_speed(1000.0 / 3.0, 5e9);
    const auto fading = FadingProfile::flat(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ici_power(cfg, mob, fading, n / 2));
    }
}
BENCHMARK(BM_IciPowerSingleSubcarrier)->Arg(64)->Arg(1024);

void BM_TrialsTaylor(benchmark::State& state) {
    const auto p = preset(PresetId::FIG2_N16);
    TrialOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_trials(p.cfg, p.mob, p.fading, ChannelMode::TAYLOR, 32, SimSeed{1}, opts));
    }
    state.SetItemsProcessed(state.iterations() * 32);
}
BENCHMARK(BM_TrialsTaylor)->Unit(benchmark::kMillisecond);

void BM_TrialsJakes(benchmark::State& state) {
    const auto p = preset(PresetId::FIG2_N16);
    TrialOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_trials(p.cfg, p.mob, p.fading, ChannelMode::JAKES, 32, SimSeed{1}, opts));
    }
    state.SetItemsProcessed(state.iterations() * 32);
}
BENCHMARK(BM_TrialsJakes)->Unit(benchmark::kMillisecond);

void BM_FeasibilityEvaluate(benchmark::State& state) {
    const auto cat = builtin_catalog();
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate({48e3, 1000.0 / 3.0, true}, cat));
    }
}
BENCHMARK(BM_FeasibilityEvaluate);

}  // namespace

BENCHMARK_MAIN();
