#include <benchmark/benchmark.h>

#include "rote/compiler.hpp"
#include "rote/search.hpp"
#include "rote/word.hpp"

namespace {

void BM_WordQPrefix(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rote::word_q(state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WordQPrefix)->Arg(10000)->Arg(100000);

void BM_FactorComplexity(benchmark::State& state) {
    rote::Word q = rote::word_q(5000);
    for (auto _ : state) benchmark::DoNotOptimize(rote::factor_complexity(q, state.range(0)));
}
BENCHMARK(BM_FactorComplexity)->Arg(16)->Arg(200);

void BM_StrictTree(benchmark::State& state) {
    rote::SearchConfig cfg;  // 5/2, strict
    for (auto _ : state) benchmark::DoNotOptimize(rote::grow_tree(cfg));
}
BENCHMARK(BM_StrictTree);

void BM_NonStrictLevelCounts(benchmark::State& state) {
    rote::SearchConfig cfg;
    cfg.strict = false;
    for (auto _ : state) benchmark::DoNotOptimize(rote::level_counts(cfg, state.range(0)));
}
BENCHMARK(BM_NonStrictLevelCounts)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Represent(benchmark::State& state) {
    const rote::NumerationSystem& sys = rote::dt_q();
    unsigned long long n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sys.represent(n % 100000));
        n += 12345;
    }
}
BENCHMARK(BM_Represent);

void BM_AdditionSynthesis(benchmark::State& state) {
    const rote::NumerationSystem& sys = rote::dt_q();
    for (auto _ : state) benchmark::DoNotOptimize(sys.addition_dfa());
    state.SetLabel("minimized 143 states");
}
BENCHMARK(BM_AdditionSynthesis)->Unit(benchmark::kMillisecond);

void BM_AdditionMembership(benchmark::State& state) {
    const rote::NumerationSystem& sys = rote::dt_q();
    rote::MultiTrackDfa add = sys.addition_dfa();
    unsigned long long x = 17, y = 911;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rote::accepts_tracks(
            add, {sys.represent(x), sys.represent(y), sys.represent(x + y)}));
        x = (x * 7 + 1) % 100000;
        y = (y * 11 + 3) % 100000;
    }
}
BENCHMARK(BM_AdditionMembership);

void BM_CompileComparison(benchmark::State& state) {
    for (auto _ : state) {
        rote::FormulaCompiler compiler(rote::dt_q());
        benchmark::DoNotOptimize(compiler.compile_text("x<=y"));
    }
}
BENCHMARK(BM_CompileComparison)->Unit(benchmark::kMillisecond);

void BM_CompileFactorEq(benchmark::State& state) {
    for (auto _ : state) {
        rote::FormulaCompiler compiler(rote::dt_q());
        benchmark::DoNotOptimize(
            compiler.compile_text("Au,v (u>=i & u<i+n & u+j=v+i) => Q[u]=Q[v]"));
    }
    state.SetLabel("the heaviest predicate definition");
}
BENCHMARK(BM_CompileFactorEq)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
