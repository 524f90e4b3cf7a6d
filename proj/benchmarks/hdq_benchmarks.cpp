#include "hdq/construct.hpp"
#include "hdq/hadamardesque.hpp"
#include "hdq/search.hpp"
#include "hdq/walsh.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_WhtInt(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<long long> v(static_cast<std::size_t>(state.range(0)));
    for (auto& x : v) x = static_cast<long long>(rng() % 1000);
    for (auto _ : state) {
        auto w = v;
        hdq::wht_inplace(std::span<long long>(w));
        benchmark::DoNotOptimize(w.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WhtInt)->RangeMultiplier(4)->Range(256, 1 << 20)->Complexity();

void BM_WhtRational(benchmark::State& state) {
    std::vector<hdq::Rational> v(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = hdq::Rational(static_cast<long>(i % 17), 7);
    for (auto _ : state) benchmark::DoNotOptimize(hdq::wht(v));
}
BENCHMARK(BM_WhtRational)->RangeMultiplier(4)->Range(64, 4096);

void BM_PairwiseDots(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<hdq::WeightedColumn> cols;
    for (hdq::ColumnIndex j = 1; j <= hdq::column_count(m); j += 3) {
        cols.push_back({hdq::Rational(static_cast<long>(j % 5) + 1, 3), j});
    }
    const hdq::HadamardesqueMatrix h(m, cols);
    for (auto _ : state) benchmark::DoNotOptimize(hdq::pairwise_dots(h));
}
BENCHMARK(BM_PairwiseDots)->DenseRange(4, 12, 4);

void BM_CrvPairwiseDots(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const hdq::CRVector v = hdq::CRVector::all_ones(m);
    for (auto _ : state) benchmark::DoNotOptimize(hdq::crv_pairwise_dots(v));
}
BENCHMARK(BM_CrvPairwiseDots)->DenseRange(4, 12, 4);

void BM_ConstructCanonical(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<hdq::Rational> a(static_cast<std::size_t>(m * (m - 1) / 2));
    for (std::size_t l = 0; l < a.size(); ++l) a[l] = hdq::Rational(static_cast<long>(l) - 3, 4);
    const hdq::PairDotVector target(a);
    for (auto _ : state) benchmark::DoNotOptimize(hdq::realize_canonical(hdq::construct_crv(target)));
}
BENCHMARK(BM_ConstructCanonical)->DenseRange(4, 10, 2);

void BM_SearchExhaustive(benchmark::State& state) {
    hdq::SearchOptions opts;
    opts.workers = static_cast<unsigned>(state.range(1));
    opts.materialize = false;
    for (auto _ : state) {
        const auto r = hdq::find_hadamard_column_sets(static_cast<int>(state.range(0)), opts);
        state.counters["nodes"] = static_cast<double>(r.nodes);
    }
}
BENCHMARK(BM_SearchExhaustive)->Args({4, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_SearchFirstSolution(benchmark::State& state) {
    hdq::SearchOptions opts;
    opts.solution_limit = 1;
    opts.workers = static_cast<unsigned>(state.range(0));
    opts.materialize = false;
    for (auto _ : state) benchmark::DoNotOptimize(hdq::find_hadamard_column_sets(8, opts));
}
BENCHMARK(BM_SearchFirstSolution)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
