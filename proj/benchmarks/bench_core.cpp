#include <benchmark/benchmark.h>

#include "evohealth/oracle.hpp"
#include "evohealth/params.hpp"
#include "evohealth/shocks.hpp"
#include "evohealth/sim.hpp"
#include "evohealth/stage3.hpp"

namespace {

using namespace evohealth;

void bm_grid_oracle_stage1(benchmark::State& state) {
    const Stage1Params p = validate_stage1(Stage1Params{});
    const auto points = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_argmax_stage1(p, 1.0, 0.1, 0.3, points));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_grid_oracle_stage1)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void bm_run_stage1(benchmark::State& state) {
    Stage1Params raw;
    raw.gamma = 0.6;
    raw.p = 0.4;
    const Stage1Params p = validate_stage1(raw);
    ShockProcessConfig cfg;
    cfg.kind = ShockKind::iid_uniform;
    cfg.a_hi = 0.1;
    cfg.seed = 42;
    const AdversityPath path = generate_path(cfg, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_stage1(p, path, 0.1, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_run_stage1)->Arg(10'000)->Unit(benchmark::kMillisecond);

void bm_generate_path_ar1(benchmark::State& state) {
    ShockProcessConfig cfg;
    cfg.kind = ShockKind::ar1;
    cfg.rho = 0.8;
    cfg.a_bar = 0.05;
    cfg.sigma = 0.01;
    cfg.seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_path(cfg, static_cast<std::size_t>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_generate_path_ar1)->Arg(10'000);

void bm_solve_stage3(benchmark::State& state) {
    const Stage3Params p = validate_stage3(Stage3Params{50.0, 0.5, 0.5, 0.25});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_health_investment3(p));
    }
}
BENCHMARK(bm_solve_stage3);

}  // namespace

BENCHMARK_MAIN();
