#include <benchmark/benchmark.h>

#include "torgr/kernels.hpp"

using namespace torgr;

static void BM_PluckerGB(benchmark::State& st) {
    const int d = static_cast<int>(st.range(0)), m = static_cast<int>(st.range(1));
    std::vector<Polynomial> gens;
    std::set<VarId> vars;
    for (const auto& F : plucker_relations(d, m)) gens.push_back(F.polynomial());
    for (const auto& u : multi_indices(d, m)) vars.insert(VarId::P(u));
    auto o = default_order(vars);
    for (auto _ : st) benchmark::DoNotOptimize(reduced_groebner(gens, o));
}
BENCHMARK(BM_PluckerGB)->Args({2, 5})->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_OrbitGB(benchmark::State& st) {
    Decomposition dec = Decomposition::unit(2, static_cast<int>(st.range(0)));
    Rng rng(1);
    auto p = random_grassmannian_point(dec.d(), dec.total(), rng);
    for (auto _ : st) benchmark::DoNotOptimize(orbit_gb(p, dec, true));
}
BENCHMARK(BM_OrbitGB)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ZetaKernel(benchmark::State& st) {
    Decomposition dec = Decomposition::unit(2, static_cast<int>(st.range(0)));
    auto m = build_map(MapKind::zeta, dec);
    for (auto _ : st) benchmark::DoNotOptimize(kernel_mh(m, 4));
}
BENCHMARK(BM_ZetaKernel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_RhoKernel(benchmark::State& st) {
    auto m = build_map(MapKind::phi_rho, Decomposition::unit(2, 5));
    const int cap = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernel_mh(m, cap));
}
BENCHMARK(BM_RhoKernel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HilbertOrbit(benchmark::State& st) {
    Decomposition dec = Decomposition::unit(2, 5);
    auto p = ones_point(2, 5);
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_orbit(p, dec, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_HilbertOrbit)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
