#include "uqaudit/audit.hpp"
#include "uqaudit/braiding.hpp"
#include "uqaudit/measurement.hpp"
#include "uqaudit/numeric.hpp"
#include "uqaudit/states.hpp"

#include <benchmark/benchmark.h>

using namespace uqaudit;

namespace {

void BM_ScalarArithmetic(benchmark::State& state) {
    const FieldScalar a = parse_scalar("(s^3 - s^2 + 2 s - 1)/(s^3 + s)");
    const FieldScalar b = parse_scalar("(s - s^-1)/(1 + s^2)");
    for (auto _ : state) {
        FieldScalar x = a * b + a / b - b;
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_ScalarArithmetic);

void BM_SingletKernel(benchmark::State& state) {
    const Matrix stacked = stacked_coproducts();
    for (auto _ : state) benchmark::DoNotOptimize(kernel(stacked));
}
BENCHMARK(BM_SingletKernel);

void BM_Invert4(benchmark::State& state) {
    const Matrix r = r_paper();
    for (auto _ : state) benchmark::DoNotOptimize(invert(r));
}
BENCHMARK(BM_Invert4);

void BM_SolveR(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_r());
}
BENCHMARK(BM_SolveR);

void BM_YangBaxter(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_yang_baxter(PaperR{}));
}
BENCHMARK(BM_YangBaxter)->Unit(benchmark::kMillisecond);

void BM_DressedJoint(benchmark::State& state) {
    const QSinglet psi = q_singlet();
    for (auto _ : state) benchmark::DoNotOptimize(dressed_joint(psi, Convention{}));
}
BENCHMARK(BM_DressedJoint)->Unit(benchmark::kMillisecond);

void BM_FloatDressedJoint(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(numeric::dressed_joint(1.5, Convention{}));
}
BENCHMARK(BM_FloatDressedJoint);

void BM_AuditDefault(benchmark::State& state) {
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_all({}, parallel));
}
BENCHMARK(BM_AuditDefault)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep(Rational(1, 4), Rational(4), 33));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
