#include <benchmark/benchmark.h>

#include <cstdint>

#include "booltop/boolsemi.hpp"
#include "booltop/lang.hpp"
#include "booltop/theory.hpp"

using namespace booltop;

namespace {

const lang::Alphabet ab("ab");

// (a+b)* b (a+b)^{n-1}: the minimal DFA has 2^n states
std::string kth_from_end(std::int64_t n) {
    std::string re = "(a+b)*b";
    for (std::int64_t i = 1; i < n; ++i) re += "(a+b)";
    return re;
}

}  // namespace

static void BM_MinimalDfa(benchmark::State& st) {
    auto re = kth_from_end(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(lang::dfa_from_regex(re, ab));
}
BENCHMARK(BM_MinimalDfa)->DenseRange(2, 8, 2);

static void BM_SyntacticMonoid(benchmark::State& st) {
    auto d = lang::dfa_from_regex(kth_from_end(st.range(0)), ab);
    for (auto _ : st) benchmark::DoNotOptimize(lang::syntactic_monoid(d));
}
BENCHMARK(BM_SyntacticMonoid)->DenseRange(2, 4);

static void BM_HalfSpace(benchmark::State& st) {
    auto d = lang::dfa_from_regex(kth_from_end(st.range(0)), ab);
    for (auto _ : st) benchmark::DoNotOptimize(theory::classes(d));
}
BENCHMARK(BM_HalfSpace)->DenseRange(2, 6, 2);

static void BM_PmStateSpace(benchmark::State& st) {
    auto ev = theory::evaluation_from_regex(ab, kth_from_end(st.range(0)), "(a+b)*b(a+b)*");
    for (auto _ : st) benchmark::DoNotOptimize(theory::pm_state_space(ev));
}
BENCHMARK(BM_PmStateSpace)->DenseRange(1, 3);

static void BM_Tensor(benchmark::State& st) {
    auto d = lang::dfa_from_regex(kth_from_end(st.range(0)), ab);
    theory::Theory th(theory::Evaluation::make(d, lang::all_words(ab)));
    const auto& m = th.minus().space;
    for (auto _ : st) benchmark::DoNotOptimize(boolsemi::tensor(m, m));
}
BENCHMARK(BM_Tensor)->DenseRange(1, 2);

static void BM_RotationClosure(benchmark::State& st) {
    auto d = lang::dfa_from_regex(kth_from_end(st.range(0)), ab);
    for (auto _ : st) benchmark::DoNotOptimize(lang::rotation_closure(d));
}
BENCHMARK(BM_RotationClosure)->DenseRange(1, 4);

BENCHMARK_MAIN();
