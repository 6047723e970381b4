#include <benchmark/benchmark.h>

#include "shirshov/span.hpp"

namespace {

using namespace shirshov;

AlgebraSpec yx_algebra() {
    auto z2 = std::make_shared<const FiniteGroup>(build_group(GroupSpec::cyclic(2)));
    const GradedAlphabet a(z2, {{"x", Element{1}}, {"y", kIdentity}});
    return AlgebraSpec(a, {{Word{0, 1}, LinComb::monomial(Word{1, 1, 0})}},
                       Field::prime(Field::kDefaultPrime));
}

// x^m y: 2^(m+1) - 1 rewrite steps.
void BM_NormalizePowerOfX(benchmark::State& state) {
    const auto spec = yx_algebra();
    Word w(static_cast<std::size_t>(state.range(0)), Letter{0});
    w.push_back(1);
    for (auto _ : state) benchmark::DoNotOptimize(normalize(spec, w));
}
BENCHMARK(BM_NormalizePowerOfX)->DenseRange(4, 12, 4);

void BM_GradedCheck(benchmark::State& state) {
    const auto spec = yx_algebra();
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_graded_theorem(spec, {Word{1}, Word{0, 0}}, 2, d, 2 * d));
}
BENCHMARK(BM_GradedCheck)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
