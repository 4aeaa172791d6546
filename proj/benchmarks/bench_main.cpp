#include <benchmark/benchmark.h>

#include "ransomgame/config.hpp"
#include "ransomgame/simulate.hpp"
#include "ransomgame/solver.hpp"

using namespace ransomgame;

namespace {

ScenarioConfig engaged_two_groups() {
    ScenarioConfig cfg = baseline_config();
    cfg.groups[0].size = 50;
    cfg.groups[1] = cfg.groups[0];
    cfg.groups[0].ransom_loss = 10.0;
    cfg.groups[1].ransom_loss = 8.0;
    return cfg;
}

void BM_AttackerBestResponse(benchmark::State& state) {
    const ScenarioConfig cfg = engaged_two_groups();
    const DefenderProfile def{2.0, 2.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(attacker_best_response(cfg.groups, cfg.globals, def));
}
BENCHMARK(BM_AttackerBestResponse);

void BM_FindEquilibrium(benchmark::State& state) {
    const ScenarioConfig cfg = engaged_two_groups();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_equilibrium(cfg.groups, cfg.globals, cfg.solver));
}
BENCHMARK(BM_FindEquilibrium);

void BM_SocialOptimum(benchmark::State& state) {
    const ScenarioConfig cfg = engaged_two_groups();
    for (auto _ : state)
        benchmark::DoNotOptimize(social_optimum(cfg.groups, cfg.globals, cfg.solver));
}
BENCHMARK(BM_SocialOptimum);

void BM_SimulateStage2(benchmark::State& state) {
    const ScenarioConfig cfg = engaged_two_groups();
    const SolveOutcome out = find_equilibrium(cfg.groups, cfg.globals, cfg.solver);
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            simulate_stage2(cfg.groups, cfg.globals, out.defenders, out.attacker, {samples, 1}));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(samples));
}
BENCHMARK(BM_SimulateStage2)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
