#include <benchmark/benchmark.h>

#include "cablewrench/config.hpp"
#include "cablewrench/search.hpp"
#include "cablewrench/statics.hpp"
#include "cablewrench/trajectory.hpp"
#include "cablewrench/workspace.hpp"

namespace {

const cablewrench::RobotConfig& cfg() {
    static const auto c = cablewrench::load_config(CABLEWRENCH_REFERENCE_CONFIG);
    return c;
}

void BM_AssembleWrenchSystem(benchmark::State& state) {
    const auto geom = cfg().geometry();
    const cablewrench::Pose pose{{0.0, 0.0, 2.0}, Eigen::Matrix3d::Identity()};
    for (auto _ : state) {
        auto sys = cablewrench::assemble_wrench_system(geom, cfg().arrangement, pose);
        benchmark::DoNotOptimize(sys.W);
    }
}
BENCHMARK(BM_AssembleWrenchSystem);

void BM_TensionFeasible(benchmark::State& state) {
    const auto geom = cfg().geometry();
    const cablewrench::Pose pose{{0.0, 0.0, 2.0}, Eigen::Matrix3d::Identity()};
    const auto sys = cablewrench::assemble_wrench_system(geom, cfg().arrangement, pose);
    const auto box = cfg().tension_box();
    const auto opts = cfg().feasibility();
    for (auto _ : state) {
        auto r = cablewrench::tension_feasible(sys, box, opts);
        benchmark::DoNotOptimize(r.residual);
    }
}
BENCHMARK(BM_TensionFeasible);

void BM_WorkspaceScan5(benchmark::State& state) {
    const auto geom = cfg().geometry();
    cablewrench::GridSpec grid = cfg().grid;
    grid.intervals = {4, 4, 4};
    cablewrench::WorkspaceOptions opts;
    opts.threads = 1;
    opts.feasibility = cfg().feasibility();
    for (auto _ : state) {
        auto ws = cablewrench::static_workspace_ao(geom, cfg().arrangement, cfg().tension_box(),
                                                   grid, opts);
        benchmark::DoNotOptimize(ws.n_feasible);
    }
}
BENCHMARK(BM_WorkspaceScan5)->Unit(benchmark::kMillisecond);

void BM_EnumerateRestricted(benchmark::State& state) {
    const auto geom = cfg().geometry();
    const auto classes = cablewrench::restricted_anchor_classes();
    for (auto _ : state) {
        std::uint64_t n = cablewrench::enumerate_arrangements(
            geom, classes, [](const cablewrench::CableArrangement&) { return true; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateRestricted)->Unit(benchmark::kMillisecond);

void BM_QuinticEval(benchmark::State& state) {
    const cablewrench::QuinticProfile p(0.0, 1.0, 2.0);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-4;
        if (t > 2.0) t = 0.0;
        benchmark::DoNotOptimize(p.position(t) + p.velocity(t) + p.acceleration(t));
    }
}
BENCHMARK(BM_QuinticEval);

} // namespace

BENCHMARK_MAIN();
