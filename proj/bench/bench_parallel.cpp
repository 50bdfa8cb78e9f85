// serial reference vs OpenMP kernel for each parallel hot spot
#include "rtf/lattice.hpp"
#include "rtf/ntransform.hpp"
#include "rtf/testfns.hpp"

#include <benchmark/benchmark.h>

using namespace rtf;

static void BM_lattice_theta(benchmark::State& st) {
    auto L = embed_ideal(Field::parse("Q(sqrt2)"), "O");
    const bool par = st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(theta_partial(L, {6, 6}, 400, par));
}
BENCHMARK(BM_lattice_theta)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_lattice_enumerate(benchmark::State& st) {
    auto L = embed_ideal(Field::parse("Q(sqrt5)"), "(2,1)");
    const bool par = st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_points(L, 300, par).size());
}
BENCHMARK(BM_lattice_enumerate)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_quadrature_panels(benchmark::State& st) {
    const bool par = st.range(0);
    for (auto _ : st)
        benchmark::DoNotOptimize(
            period_trapezoid(UnipKernel::UpsilonOverUnip, 5, -1, LocalTestFn::hecke(6), 1.0, 1 << 16, par));
}
BENCHMARK(BM_quadrature_panels)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_subset_sums(benchmark::State& st) {
    std::map<Prime, int> e;
    for (int i = 0; i < 14; ++i) e[Prime{"p" + std::to_string(i), 3 + 2 * i}] = 2;
    Ideal n(e);
    const bool par = st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(n_transform(ArithFn::log_norm(), n, par));
}
BENCHMARK(BM_subset_sums)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_monte_carlo(benchmark::State& st) {
    const bool par = st.range(0);
    for (auto _ : st)
        benchmark::DoNotOptimize(sphere_I({0.3, -0.2, 0.1}, SphereMode::MonteCarlo, 2'000'000, 7, par));
}
BENCHMARK(BM_monte_carlo)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
