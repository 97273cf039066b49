#include "cyclocode/codes.hpp"
#include "cyclocode/leaders.hpp"
#include "cyclocode/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace cyclo;

namespace {

const std::vector<std::array<i64, 3>> kPoints = {{3, 3, 2}, {5, 4, 4}, {9, 4, 8}, {7, 5, 3}};

FamilyParams point(const benchmark::State& st) {
    const auto& p = kPoints[static_cast<std::size_t>(st.range(0))];
    return FamilyParams::make(p[0], p[1], p[2]);
}

void BM_Partition(benchmark::State& st) {
    const auto fp = point(st);
    for (auto _ : st) benchmark::DoNotOptimize(CosetPartition(fp).cosets().size());
    st.counters["n"] = static_cast<double>(fp.n);
}
BENCHMARK(BM_Partition)->DenseRange(0, 3);

void BM_LeaderClosedForm(benchmark::State& st) {
    const auto fp = point(st);
    for (auto _ : st) {
        i64 k = 0;
        for (i64 g = 0; g < fp.n; ++g) k += is_leader_closed_form(fp, g, EVariant::proof).is_leader;
        benchmark::DoNotOptimize(k);
    }
    st.SetItemsProcessed(st.iterations() * fp.n);
}
BENCHMARK(BM_LeaderClosedForm)->DenseRange(0, 3);

void BM_SpectrumClosedForm(benchmark::State& st) {
    const auto fp = point(st);
    for (auto _ : st) benchmark::DoNotOptimize(spectrum_closed_form(fp));
}
BENCHMARK(BM_SpectrumClosedForm)->DenseRange(0, 3);

void BM_Factorization(benchmark::State& st) {
    const auto fp = point(st);
    for (auto _ : st) benchmark::DoNotOptimize(factor_xn_minus_1(fp).size());
}
BENCHMARK(BM_Factorization)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_MinDistanceGolden(benchmark::State& st) {
    const auto fp = FamilyParams::make(3, 3, 2);
    const auto code = symmetric_bch_code(fp, 4);
    FieldContext ctx(fp);
    for (auto _ : st) benchmark::DoNotOptimize(min_distance(ctx.base(), code.code).lower);
}
BENCHMARK(BM_MinDistanceGolden)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
