#include "radhopf/gp_enum.hpp"
#include "radhopf/groupring.hpp"
#include "radhopf/hopf.hpp"
#include "radhopf/smash.hpp"

#include <benchmark/benchmark.h>

using namespace radhopf;

namespace {

void cyclo_multiply(benchmark::State& state) {
    const auto f = FieldDescriptor::make(3, static_cast<unsigned>(state.range(0)));
    CycloElt x = CycloElt::zero(f), y = CycloElt::zero(f);
    for (Exp k = 0; k < f.pn; ++k) {
        x.add_zeta_power(k, Rat(k + 1));
        y.add_zeta_power(k, Rat(2 * k - 3));
    }
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(cyclo_multiply)->DenseRange(1, 3);

void group_ring_multiply(benchmark::State& state) {
    const auto f = FieldDescriptor::make(3, static_cast<unsigned>(state.range(0)));
    const auto a = e_basis(f, 1), b = e_basis(f, 2);
    for (auto _ : state) benchmark::DoNotOptimize(gr_mul(a, b));
}
BENCHMARK(group_ring_multiply)->DenseRange(1, 2);

void fixed_ring_dense(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fixed_ring(3, 2, FixedRingMethod::Dense));
}
BENCHMARK(fixed_ring_dense)->Unit(benchmark::kMillisecond);

void fixed_ring_orbits(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fixed_ring(3, static_cast<unsigned>(state.range(0)), FixedRingMethod::OrbitBlocks));
}
BENCHMARK(fixed_ring_orbits)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void smash_iso(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(iso_check(3, static_cast<unsigned>(state.range(0)), 2));
}
BENCHMARK(smash_iso)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void census_run(benchmark::State& state) {
    const auto [gamma, delta] = radical_galois_group(3, 3, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(census(gamma, delta));
}
BENCHMARK(census_run)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
