#include <benchmark/benchmark.h>

#include "whittaker/gt_pattern.hpp"
#include "whittaker/mellin_barnes.hpp"
#include "whittaker/radial.hpp"

using namespace whittaker;

namespace {

ExponentSystem n2_system() { return make_exponent_system(2, {HalfInt(6), HalfInt(4)}, {}); }

ExponentSystem n4_system() {
    return make_exponent_system(2, {HalfInt::parse("13/2"), HalfInt::parse("9/2"), HalfInt::parse("-3/2"), HalfInt::parse("-7/2")},
                                {HalfInt::parse("3/2"), HalfInt::parse("-1/2")});
}

void BM_EnumeratePatterns(benchmark::State& st) {
    const Weight lam{HalfInt(static_cast<int>(st.range(0))), HalfInt(2), HalfInt(1), HalfInt(0)};
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_patterns(lam).size());
}
BENCHMARK(BM_EnumeratePatterns)->Arg(2)->Arg(4)->Arg(6);

void BM_ResidueEval(benchmark::State& st) {
    const auto es = st.range(0) == 2 ? n2_system() : n4_system();
    for (auto _ : st) benchmark::DoNotOptimize(residue_eval(1, Kernel::K, es, 2.0, 1.5));
}
BENCHMARK(BM_ResidueEval)->Arg(2)->Arg(4);

void BM_ContourQuadrature(benchmark::State& st) {
    const auto es = n2_system();
    for (auto _ : st) benchmark::DoNotOptimize(contour_quadrature(1, Kernel::K, es, 2.0, 1.5));
}
BENCHMARK(BM_ContourQuadrature)->Unit(benchmark::kMillisecond);

void BM_ApplyEulerTermwise(benchmark::State& st) {
    const auto es = n4_system();
    const auto f = residue_series(1, Kernel::K, es, static_cast<int>(st.range(0)));
    const auto op = ode_system(es).second;
    for (auto _ : st) benchmark::DoNotOptimize(apply_euler_termwise(op, f).terms.size());
}
BENCHMARK(BM_ApplyEulerTermwise)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
