// Parallel kernels against their serial paths.  Arg(0) is serial, Arg(1) parallel.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qgt/verify.hpp"

using namespace qgt;

namespace {

const EvalConfig kFloat = EvalConfig::floating(mpq_class(1, 2));

void BM_Chains(benchmark::State& state) {
    ChainSampler sampler(Graph::bc(GroupType{Family::C}), kFloat);
    Signature top(40);
    for (long i = 0; i < 40; ++i) top[i] = std::min(2L, 39 - i);
    sampler.sample_many(top, 20, 16, 1);  // warm the row cache
    for (auto _ : state) benchmark::DoNotOptimize(sampler.sample_many(top, 20, 2000, 1, state.range(0) == 1));
}
BENCHMARK(BM_Chains)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_StripQuadrature(benchmark::State& state) {
    QuadratureSpec quad;
    quad.parallel = state.range(0) == 1;
    const Signature lam{3, 2, 2, 1, 0, 0, -1, -2};
    const auto x = Scalar::from_cd(cd(0.6, 0.5));
    for (auto _ : state) benchmark::DoNotOptimize(typeA_finiteN_strip(lam, 8, 4, x, kFloat, quad));
}
BENCHMARK(BM_StripQuadrature)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TorusFunctional(benchmark::State& state) {
    const int saved = omp_get_max_threads();
    if (state.range(0) == 0) omp_set_num_threads(1);
    auto f = [](const std::vector<cd>& z) { return bcd_eval_t(GroupType{Family::C}, {3, 1}, z); };
    for (auto _ : state) benchmark::DoNotOptimize(f_mu_functional(TorusFamily::C, {3, 1}, f, 2, 64));
    omp_set_num_threads(saved);
}
BENCHMARK(BM_TorusFunctional)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifySuite(benchmark::State& state) {
    VerifyOptions opt;
    opt.max_n = 5;
    opt.parallel = state.range(0) == 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_verify_suite("contour-A", opt));
}
BENCHMARK(BM_VerifySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
