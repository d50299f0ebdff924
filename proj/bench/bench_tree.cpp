// Compares the block-merge expansion kernels against the append-then-sort
// reference, and the two threading modes of full verification.
//
// Run: build/bench/tree_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <vector>

#include "farey/tree.hpp"

namespace {

constexpr std::int64_t kLevel = 120;

const std::vector<farey::TerminalPair>& pair_level() {
    static const auto level = farey::build_terminal_tree(kLevel).levels.back();
    return level;
}

const std::vector<farey::FareyVertex>& farey_level() {
    static const auto level = farey::build_farey_tree(kLevel).levels.back();
    return level;
}

void BM_ExpandPairsReference(benchmark::State& state) {
    std::vector<farey::TerminalPair> next;
    std::vector<std::int64_t> parent;
    for (auto _ : state) {
        farey::detail::expand_pair_level_reference(pair_level(), next, parent);
        benchmark::DoNotOptimize(next.data());
    }
}
BENCHMARK(BM_ExpandPairsReference);

void BM_ExpandPairsMergeSerial(benchmark::State& state) {
    std::vector<farey::TerminalPair> next;
    std::vector<std::int64_t> parent;
    for (auto _ : state) {
        farey::detail::expand_pair_level(pair_level(), next, parent, false);
        benchmark::DoNotOptimize(next.data());
    }
}
BENCHMARK(BM_ExpandPairsMergeSerial);

void BM_ExpandPairsMergeParallel(benchmark::State& state) {
    std::vector<farey::TerminalPair> next;
    std::vector<std::int64_t> parent;
    for (auto _ : state) {
        farey::detail::expand_pair_level(pair_level(), next, parent, true);
        benchmark::DoNotOptimize(next.data());
    }
}
BENCHMARK(BM_ExpandPairsMergeParallel);

void BM_ExpandFareyReference(benchmark::State& state) {
    std::vector<farey::FareyVertex> next;
    std::vector<std::int64_t> parent;
    for (auto _ : state) {
        farey::detail::expand_farey_level_reference(farey_level(), next, parent);
        benchmark::DoNotOptimize(next.data());
    }
}
BENCHMARK(BM_ExpandFareyReference);

void BM_ExpandFareyMergeParallel(benchmark::State& state) {
    std::vector<farey::FareyVertex> next;
    std::vector<std::int64_t> parent;
    for (auto _ : state) {
        farey::detail::expand_farey_level(farey_level(), next, parent, true);
        benchmark::DoNotOptimize(next.data());
    }
}
BENCHMARK(BM_ExpandFareyMergeParallel);

void BM_YoungMapReference(benchmark::State& state) {
    std::vector<farey::TerminalPair> young;
    std::vector<std::int64_t> to_farey;
    for (auto _ : state) {
        farey::detail::young_level_from_farey_reference(farey_level(), young, to_farey);
        benchmark::DoNotOptimize(young.data());
    }
}
BENCHMARK(BM_YoungMapReference);

void BM_YoungMapParallel(benchmark::State& state) {
    std::vector<farey::TerminalPair> young;
    std::vector<std::int64_t> to_farey;
    for (auto _ : state) {
        farey::detail::young_level_from_farey(farey_level(), young, to_farey, true);
        benchmark::DoNotOptimize(young.data());
    }
}
BENCHMARK(BM_YoungMapParallel);

void BM_VerifySerial(benchmark::State& state) {
    farey::VerifyOptions options;
    options.parallel = false;
    options.streaming = true;
    options.collect_stats = false;
    for (auto _ : state) {
        const auto report = farey::verify_theorem1(state.range(0), options);
        benchmark::DoNotOptimize(report.pass);
    }
}
BENCHMARK(BM_VerifySerial)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
    farey::VerifyOptions options;
    options.parallel = true;
    options.streaming = true;
    options.collect_stats = false;
    for (auto _ : state) {
        const auto report = farey::verify_theorem1(state.range(0), options);
        benchmark::DoNotOptimize(report.pass);
    }
}
BENCHMARK(BM_VerifyParallel)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
