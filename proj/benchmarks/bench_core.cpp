#include <benchmark/benchmark.h>

#include <random>

#include "rhombus/audit.hpp"
#include "rhombus/combine.hpp"
#include "rhombus/data.hpp"
#include "rhombus/product.hpp"
#include "rhombus/solver.hpp"

using namespace rhombus;

namespace {

void BM_LatticeSqdistSweep(benchmark::State& state) {
    const auto& pts = bundled_b154().lattice();
    for (auto _ : state) {
        BigInt acc = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                acc += lattice_sqdist(pts[i], pts[j]).s;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * 11781);
}
BENCHMARK(BM_LatticeSqdistSweep);

void BM_FindForbiddenSetsB154(benchmark::State& state) {
    const FamilySet all{Family::C3Element, Family::C4Element, Family::TTriple,
                        Family::EqPair433};
    for (auto _ : state) {
        auto sets = find_forbidden_sets(bundled_b154(), all);
        benchmark::DoNotOptimize(sets.c4.data());
    }
}
BENCHMARK(BM_FindForbiddenSetsB154);

void BM_SolveB154Certificate(benchmark::State& state) {
    const ConstraintSystem sys = build_system(bundled_b154(), b154_rules());
    for (auto _ : state) {
        auto verdict = solve(sys);
        benchmark::DoNotOptimize(verdict.status);
    }
}
BENCHMARK(BM_SolveB154Certificate);

void BM_SolveB46Certificate(benchmark::State& state) {
    const ConstraintSystem sys = build_system(bundled_b46(), b46_rules());
    for (auto _ : state) {
        auto verdict = solve(sys);
        benchmark::DoNotOptimize(verdict.status);
    }
}
BENCHMARK(BM_SolveB46Certificate);

void BM_AuditB46(benchmark::State& state) {
    for (auto _ : state) {
        auto report = audit_minimality(bundled_b46(), b46_rules(), 1);
        benchmark::DoNotOptimize(report.entries.data());
    }
}
BENCHMARK(BM_AuditB46);

void BM_CombineTriangles(benchmark::State& state) {
    const PointSet c3 = unit_triangle_set();
    for (auto _ : state) {
        auto result = combine(c3, c3, 2);
        benchmark::DoNotOptimize(result.size());
    }
}
BENCHMARK(BM_CombineTriangles);

void BM_PowerWitnessK6(benchmark::State& state) {
    const Graph k6 = complete_graph(6);
    std::mt19937_64 rng(1);
    for (auto _ : state) {
        Coloring col(216);
        for (auto& c : col) c = (rng() & 1) ? Color::Red : Color::Blue;
        auto witness = power_mono_c4_witness(k6, 3, col);
        benchmark::DoNotOptimize(witness.data());
    }
}
BENCHMARK(BM_PowerWitnessK6);

}  // namespace

BENCHMARK_MAIN();
