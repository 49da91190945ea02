#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "iaa/attributes.hpp"
#include "iaa/curve.hpp"
#include "iaa/film_study.hpp"
#include "iaa/similarity.hpp"
#include "iaa/weight_learning.hpp"

using namespace iaa;

namespace {

std::vector<IntervalSet> make_sets(std::size_t count, std::size_t intervals, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(1.0, 10.0);
    std::vector<IntervalSet> sets;
    sets.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Interval> iv;
        iv.reserve(intervals);
        for (std::size_t i = 0; i < intervals; ++i) {
            double a = value(rng), b = value(rng);
            iv.emplace_back(std::min(a, b), std::max(a, b));
        }
        sets.emplace_back("set_" + std::to_string(k), std::move(iv));
    }
    return sets;
}

}  // namespace

static void BM_BuildCurve(benchmark::State& state) {
    const auto sets = make_sets(1, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_curve(sets[0]));
}
BENCHMARK(BM_BuildCurve)->Arg(5)->Arg(50)->Arg(500);

static void BM_Summarize(benchmark::State& state) {
    const auto sets = make_sets(1, static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(summarize(sets[0]));
}
BENCHMARK(BM_Summarize)->Arg(5)->Arg(50)->Arg(500);

static void BM_SimilarityPair(benchmark::State& state) {
    const auto sets = make_sets(2, 10, 3);
    const auto a = summarize(sets[0]);
    const auto b = summarize(sets[1]);
    const auto w = WeightVector::defaults();
    for (auto _ : state) benchmark::DoNotOptimize(similarity(a, b, w, 9.0));
}
BENCHMARK(BM_SimilarityPair);

static void BM_SimilarityMatrix(benchmark::State& state) {
    const auto sets = make_sets(static_cast<std::size_t>(state.range(0)), 10, 4);
    const auto w = WeightVector::defaults();
    const auto range = RangeSpec::global(1.0, 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(similarity_matrix(sets, w, range));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimilarityMatrix)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

static void BM_VariantReconciliation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reconcile_film_study());
}
BENCHMARK(BM_VariantReconciliation)->Unit(benchmark::kMillisecond);

static void BM_WeightLearning(benchmark::State& state) {
    GeneratorConfig cfg;
    cfg.set_count = static_cast<std::size_t>(state.range(0));
    const auto range = RangeSpec::global(1.0, 10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(learn_weights(cfg, range, 10000, 3));
}
BENCHMARK(BM_WeightLearning)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
