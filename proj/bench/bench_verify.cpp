// Serial vs OpenMP differential trials, and the uncounted term algebra.

#include <benchmark/benchmark.h>

#include "dgre/metrics.hpp"
#include "dgre/verify.hpp"

namespace {

dgre::VerifyOptions options(benchmark::State& state) {
    dgre::VerifyOptions opts;
    opts.trials = static_cast<std::size_t>(state.range(0));
    opts.seed = 1;
    return opts;
}

void BM_VerifySerial(benchmark::State& state) {
    auto opts = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(dgre::run_verify_serial(opts).passed());
}
BENCHMARK(BM_VerifySerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
    auto opts = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(dgre::run_verify(opts).passed());
}
BENCHMARK(BM_VerifyParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ArcInsert(benchmark::State& state) {
    auto in = dgre::corpus_input(dgre::OpKind::arc_insert, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dgre::run_uncounted(in).size());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ArcInsert)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_ArcOmit(benchmark::State& state) {
    auto in = dgre::corpus_input(dgre::OpKind::arc_omit, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dgre::run_uncounted(in).size());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ArcOmit)->RangeMultiplier(2)->Range(8, 256)->Complexity();

} // namespace

BENCHMARK_MAIN();
