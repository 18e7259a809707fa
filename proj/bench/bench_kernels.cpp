// Serial reference versus OpenMP kernels. Run with CHAMBERED_THREADS=k.
#include "chambered/catalog.hpp"
#include "chambered/fan.hpp"
#include "chambered/trunc.hpp"

#include <benchmark/benchmark.h>

using namespace chambered;

namespace {

Exec exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

const CoxeterSystem& a2() {
    static const CoxeterSystem sys(catalog::affine_A(2));
    return sys;
}

void BM_Coverage(benchmark::State& state) {
    CoverageOptions opts;
    opts.count = 1000;
    opts.exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(coverage_sample(a2(), opts));
}

void BM_Enumerate(benchmark::State& state) {
    static const CoxeterSystem sys(catalog::affine_D(4));
    EnumerateOptions opts;
    opts.exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(sys.enumerate_up_to_length(6, opts));
}

void BM_PairwiseDisjoint(benchmark::State& state) {
    const Ball ball = a2().enumerate_up_to_length(3);
    std::vector<GMatrix> gs;
    for (const auto& w : ball.elements)
        gs.push_back(g_matrix_P(w));
    for (const auto& w : ball.elements)
        gs.push_back(g_matrix_R(w));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_pairs(gs, true, exec_of(state)));
}

void BM_Oracle(benchmark::State& state) {
    const trunc::OracleContext ctx(a2(), 6);
    std::vector<Word> words;
    for (const auto& w : a2().enumerate_up_to_length(3).elements)
        words.push_back(w.word());
    for (auto _ : state)
        benchmark::DoNotOptimize(trunc::oracle_g_matrices(ctx, words, exec_of(state)));
}

} // namespace

BENCHMARK(BM_Coverage)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairwiseDisjoint)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
