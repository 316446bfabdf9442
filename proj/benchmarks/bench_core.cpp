#include "proxima/algebra.hpp"
#include "proxima/cycles.hpp"
#include "proxima/fixtures.hpp"
#include "proxima/kernel.hpp"
#include "proxima/proximity.hpp"

#include <benchmark/benchmark.h>

using namespace proxima;

namespace {

const ShapeFixture& necklace() {
    static const ShapeFixture f = build_fixture("hawaiian_necklace");
    return f;
}

void BM_Closure(benchmark::State& state) {
    const CWSpace& s = necklace().space;
    CellSet cells = cells_of_dim(s, s.universe(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(closure(s, cells));
}
BENCHMARK(BM_Closure);

void BM_Contour(benchmark::State& state) {
    const CWSpace& s = necklace().space;
    CellSet cells = s.complex("HnE").cells;
    for (auto _ : state) benchmark::DoNotOptimize(contour(s, cells));
}
BENCHMARK(BM_Contour);

void BM_ExtractCycles(benchmark::State& state) {
    const CWSpace& s = necklace().space;
    CellSet cells = s.complex("HnE").cells;
    for (auto _ : state) benchmark::DoNotOptimize(extract_cycles(s, cells));
}
BENCHMARK(BM_ExtractCycles);

void BM_FreeRep(benchmark::State& state) {
    const ShapeFixture& f = necklace();
    CellSet cl = closure(f.space, f.shape);
    for (auto _ : state) benchmark::DoNotOptimize(free_fg_rep(f.space, cl, f.declared_generators));
}
BENCHMARK(BM_FreeRep);

void BM_BuildFixture(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_fixture("hawaiian_butterfly"));
}
BENCHMARK(BM_BuildFixture);

void BM_CechAxioms(benchmark::State& state) {
    const CWSpace& s = necklace().space;
    auto rel = [&s](const CellSet& a, const CellSet& b) { return near(s, a, b); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_cech_axioms(s, rel, static_cast<std::size_t>(state.range(0)), 7));
    }
}
BENCHMARK(BM_CechAxioms)->Arg(100)->Arg(1000);

void BM_DescriptiveAxioms(benchmark::State& state) {
    const CWSpace& s = necklace().space;
    ProbeFunction probe = ProbeFunction::builtin("beta0");
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_descriptive_axioms(s, probe, static_cast<std::size_t>(state.range(0)), 7));
    }
}
BENCHMARK(BM_DescriptiveAxioms)->Arg(100)->Arg(1000);

} // namespace
BENCHMARK_MAIN();
