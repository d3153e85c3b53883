#include <benchmark/benchmark.h>

#include <utcochar/cochar.hpp>
#include <utcochar/schur.hpp>
#include <utcochar/series.hpp>

using namespace utcochar;

static void SeriesMul(benchmark::State &state)
{
    const auto d = static_cast<std::size_t>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const TruncatedSeries g = geometric_product(1, d, n);
    for (auto _ : state) {
        TruncatedSeries product = g * g;
        benchmark::DoNotOptimize(product);
    }
    state.counters["terms"] = static_cast<double>(g.size());
}
BENCHMARK(SeriesMul)->Args({3, 10})->Args({5, 10})->Args({5, 14})->Unit(benchmark::kMillisecond);

static void TimesGeometric(benchmark::State &state)
{
    const auto d = static_cast<std::size_t>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const TruncatedSeries one = TruncatedSeries::constant(d, n, 1);
    for (auto _ : state) {
        TruncatedSeries g = times_geometric(one);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(TimesGeometric)->Args({3, 10})->Args({7, 10})->Unit(benchmark::kMillisecond);

static void YoungDerivePower(benchmark::State &state)
{
    const auto d = static_cast<std::size_t>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        MultiplicitySeries h = MultiplicitySeries::unit(Partition{}, d, n);
        for (int j = 0; j < 4; ++j) {
            h = young_derive(h);
        }
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(YoungDerivePower)->Args({4, 10})->Args({7, 10})->Unit(benchmark::kMillisecond);

static void MultiplicitySeriesUk(benchmark::State &state)
{
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        MultiplicitySeries m = multiplicity_series_Uk(k, complete_variable_count(k), n);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(MultiplicitySeriesUk)->Args({2, 12})->Args({3, 10})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void HilbertSeriesUk(benchmark::State &state)
{
    const int k = static_cast<int>(state.range(0));
    const auto d = static_cast<std::size_t>(state.range(1));
    const int n = static_cast<int>(state.range(2));
    for (auto _ : state) {
        TruncatedSeries h = hilbert_series_Uk(k, d, n);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(HilbertSeriesUk)->Args({3, 3, 10})->Args({3, 5, 12})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
