#include <benchmark/benchmark.h>

#include "sidigraph/closed_form.hpp"
#include "sidigraph/ordering.hpp"
#include "sidigraph/spectra.hpp"

namespace {

using namespace sidigraph;

void BM_enumerate_class(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(n));
}
BENCHMARK(BM_enumerate_class)->Arg(20)->Arg(40)->Arg(100);

void BM_closed_form_ranking(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(full_ranking(n, Category::even_even));
}
BENCHMARK(BM_closed_form_ranking)->Arg(20)->Arg(60)->Arg(100);

void BM_oracle_energy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SignedDigraph g =
        build_adjacency(make_config(n, 2, Sign::positive, n - 2, Sign::negative));
    for (auto _ : state) benchmark::DoNotOptimize(energy_of_sidigraph(g));
}
BENCHMARK(BM_oracle_energy)->Arg(12)->Arg(40)->Arg(120);

void BM_char_poly_roots(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SignedDigraph g =
        build_adjacency(make_config(n, n / 2, Sign::positive, n - n / 2, Sign::negative));
    for (auto _ : state) {
        const IntPolynomial p = char_poly(g);
        benchmark::DoNotOptimize(poly_roots(p, 1e-12));
    }
}
BENCHMARK(BM_char_poly_roots)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
