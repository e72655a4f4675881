#include <benchmark/benchmark.h>

#include "fwword/fwword.hpp"

namespace {

using namespace fwword;

const PeriodSet& two_close() { static const auto p = make_period_set({5, 7}); return p; }
const PeriodSet& wide_gap() { static const auto p = make_period_set({3, 1000000007}); return p; }
const PeriodSet& three_periods() { static const auto p = make_period_set({89, 144, 233}); return p; }

} // namespace

static void BM_FastWord(benchmark::State& state)
{
    const auto n = static_cast<Length>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fw_fast(three_periods(), n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FastWord)->RangeMultiplier(10)->Range(1000, 1000000);

// The union-find construction the fast path replaces.
static void BM_OracleWord(benchmark::State& state)
{
    const auto n = static_cast<Length>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fw_oracle(three_periods(), n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OracleWord)->RangeMultiplier(10)->Range(1000, 1000000);

static void BM_LetterAtBatched(benchmark::State& state)
{
    Position i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(letter_at(wide_gap(), 1000000000000ULL, i));
        i = (i + 999983) % 1000000000000ULL;
    }
}
BENCHMARK(BM_LetterAtBatched);

static void BM_LetterAtStepwise(benchmark::State& state)
{
    const auto n = static_cast<Length>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(stepwise::letter_at(two_close(), n, n - 1));
}
BENCHMARK(BM_LetterAtStepwise)->Arg(8)->Arg(1000);

static void BM_ExtremalBatched(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(extremal_length(wide_gap()));
}
BENCHMARK(BM_ExtremalBatched);

static void BM_ExtremalStepwise(benchmark::State& state)
{
    auto p = make_period_set({3, 30001});
    for (auto _ : state)
        benchmark::DoNotOptimize(stepwise::extremal_length(p));
}
BENCHMARK(BM_ExtremalStepwise);

BENCHMARK_MAIN();
