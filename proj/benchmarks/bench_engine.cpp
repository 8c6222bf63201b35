#include <benchmark/benchmark.h>

#include "cgt/engine.hpp"
#include "cgt/position_text.hpp"
#include "cgt/rulesets/myopic_col.hpp"
#include "cgt/rulesets/rotisserie.hpp"
#include "cgt/rulesets/tower_nim.hpp"
#include "cgt/verify/enumerate.hpp"

namespace {

void BM_TowerSweep(benchmark::State& state)
{
    auto positions = cgt::verify::enumerate_tower(static_cast<std::uint32_t>(state.range(0)), 4);
    for (auto _ : state) {
        cgt::ImpartialSolver<cgt::TowerNimPosition> solver;
        for (const auto& p : positions) {
            benchmark::DoNotOptimize(solver.grundy(p));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(positions.size()));
}
BENCHMARK(BM_TowerSweep)->DenseRange(3, 6);

void BM_RotisserieSweep(benchmark::State& state)
{
    auto positions = cgt::verify::enumerate_rotisserie(static_cast<std::uint32_t>(state.range(0)), 5);
    for (auto _ : state) {
        cgt::ImpartialSolver<cgt::RotisseriePosition> solver;
        for (const auto& p : positions) {
            benchmark::DoNotOptimize(solver.outcome(p));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(positions.size()));
}
BENCHMARK(BM_RotisserieSweep)->DenseRange(2, 4);

/// Cold solve of an uncolored path; every call builds a fresh table.
void BM_ColPathCold(benchmark::State& state)
{
    auto path = cgt::ColPosition::path(std::vector<cgt::Color>(state.range(0), cgt::Color::Uncolored));
    for (auto _ : state) {
        cgt::PartizanSolver<cgt::ColPosition> solver;
        benchmark::DoNotOptimize(solver.value(path));
    }
}
BENCHMARK(BM_ColPathCold)->DenseRange(4, 10, 2);

void BM_ColTreeCold(benchmark::State& state)
{
    auto tree = cgt::parse_col_tree("U(U(U,U),U(U,U(U)))");
    for (auto _ : state) {
        cgt::PartizanSolver<cgt::ColPosition> solver;
        benchmark::DoNotOptimize(solver.value(tree));
    }
}
BENCHMARK(BM_ColTreeCold);

} // namespace

BENCHMARK_MAIN();
