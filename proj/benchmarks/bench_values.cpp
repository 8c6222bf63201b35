#include <benchmark/benchmark.h>

#include "cgt/dyadic.hpp"
#include "cgt/game.hpp"
#include "cgt/value_text.hpp"

namespace {

void BM_StarMultipleSum(benchmark::State& state)
{
    auto g = cgt::star_multiple(static_cast<std::uint64_t>(state.range(0)), cgt::Dyadic{1, 1});
    auto h = cgt::star_multiple(static_cast<std::uint64_t>(state.range(0)) + 1, cgt::Dyadic{-3, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(g + h);
    }
}
BENCHMARK(BM_StarMultipleSum)->Arg(1)->Arg(4)->Arg(16);

void BM_LeqOverStore(benchmark::State& state)
{
    auto games = cgt::all_games();
    for (auto _ : state) {
        std::size_t below = 0;
        for (auto g : games) {
            below += cgt::leq(g, cgt::star()) ? 1 : 0;
        }
        benchmark::DoNotOptimize(below);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(games.size()));
}
BENCHMARK(BM_LeqOverStore);

void BM_FormatValue(benchmark::State& state)
{
    auto g = cgt::star_multiple(3, cgt::Dyadic{5, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cgt::format_value(g));
    }
}
BENCHMARK(BM_FormatValue);

} // namespace
