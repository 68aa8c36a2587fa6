// Serial reference kernel against the pruned OpenMP kernel on the same
// uncovering instances.

#include <benchmark/benchmark.h>

#include "ubb/construct.hpp"
#include "ubb/uncover_kernel.hpp"

namespace {

struct Instance {
    std::vector<ubb::EdgeSubset> trees;
    std::size_t edges;
    int t;
};

// 0, 1: K_8 and K_9 complete-graph UBBs; 2: K_8 with its last tree dropped.
Instance instance(int which) {
    const ubb::Uncovering u = ubb::ubb_complete(which == 1 ? 9 : 8);
    Instance in{{}, u.graph().edge_count(), u.t()};
    for (const auto& tree : u.trees()) in.trees.push_back(tree.edges());
    if (which == 2) in.trees.pop_back();
    return in;
}

void BM_Serial(benchmark::State& state) {
    const Instance in = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ubb::find_uncovered_serial(in.trees, in.edges, in.t));
}

void BM_Parallel(benchmark::State& state) {
    const Instance in = instance(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(ubb::find_uncovered_parallel(in.trees, in.edges, in.t, threads));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
