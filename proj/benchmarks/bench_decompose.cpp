#include <benchmark/benchmark.h>

#include <random>

#include "shirshov/intervals.hpp"

namespace {

using namespace shirshov;

GradeSequence random_sequence(const GroupSpec& spec, std::size_t n) {
    auto group = std::make_shared<const FiniteGroup>(build_group(spec));
    std::mt19937_64 rng(0);
    GradeSequence seq{group, std::vector<Element>(n)};
    for (auto& e : seq.elems) e = Element{static_cast<std::uint32_t>(rng() % group->order())};
    return seq;
}

void BM_DecomposeCyclic17(benchmark::State& state) {
    const auto seq = random_sequence(GroupSpec::cyclic(17), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_optimal(seq));
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecomposeCyclic17)->RangeMultiplier(4)->Range(1 << 10, 1 << 22)->Complexity(benchmark::oN);

void BM_DecomposeSymmetric5(benchmark::State& state) {
    const auto seq = random_sequence(GroupSpec::symmetric(5), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_optimal(seq));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DecomposeSymmetric5)->Range(1 << 12, 1 << 20);

void BM_VerifyDecomposition(benchmark::State& state) {
    const auto seq = random_sequence(GroupSpec::dihedral(6), static_cast<std::size_t>(state.range(0)));
    const auto d = decompose_optimal(seq);
    for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(seq, d));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerifyDecomposition)->Range(1 << 12, 1 << 20);

}  // namespace

BENCHMARK_MAIN();
