// Serial reference kernels against their OpenMP counterparts on inputs taken
// from the worked examples (F_37, n = 10) and a slightly larger GRS code.

#include <benchmark/benchmark.h>

#include "ecpkit/code.hpp"
#include "ecpkit/construct.hpp"
#include "ecpkit/harness.hpp"
#include "ecpkit/kernels.hpp"

namespace {

using namespace ecpkit;

const FieldSpec& f37() {
    static const FieldSpec f = FieldSpec::make(37);
    return f;
}

LinearCode example_c() {
    return example_triple(ExampleId::Ex4_1a).c;
}

LinearCode grs_code(std::size_t n, std::size_t k) {
    return grs(GrsSpec{f37(), iota_points(f37(), n), {}, k});
}

Vec received_word(const LinearCode& c) {
    Vec msg(c.dimension());
    for (std::size_t i = 0; i < msg.size(); ++i) msg[i] = Felt{static_cast<std::uint32_t>(3 * i + 1)};
    Vec y = encode(c, msg);
    y[1] = f37().add(y[1], Felt{5});
    y[7] = f37().add(y[7], Felt{11});
    return y;
}

void BM_NearestScanSerial(benchmark::State& st) {
    const LinearCode c = example_c();
    const Vec y = received_word(c);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::nearest_scan_serial(c.generator(), y));
}

void BM_NearestScanParallel(benchmark::State& st) {
    const LinearCode c = example_c();
    const Vec y = received_word(c);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::nearest_scan(c.generator(), y));
}

void BM_MinWeightSerial(benchmark::State& st) {
    const LinearCode c = example_c();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::min_weight_serial(c.generator()));
}

void BM_MinWeightParallel(benchmark::State& st) {
    const LinearCode c = example_c();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::min_weight(c.generator()));
}

void BM_DependentColumnsSerial(benchmark::State& st) {
    const Mat h = parity_check(grs_code(static_cast<std::size_t>(st.range(0)), 4));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::min_dependent_columns_serial(h));
}

void BM_DependentColumnsParallel(benchmark::State& st) {
    const Mat h = parity_check(grs_code(static_cast<std::size_t>(st.range(0)), 4));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::min_dependent_columns(h));
}

void BM_SubsetSumsSerial(benchmark::State& st) {
    const Vec alpha = iota_points(f37(), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::subset_sums_serial(f37(), alpha, 5));
}

void BM_SubsetSumsParallel(benchmark::State& st) {
    const Vec alpha = iota_points(f37(), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::subset_sums(f37(), alpha, 5));
}

void BM_SubsetSumsDp(benchmark::State& st) {
    const Vec alpha = iota_points(f37(), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::subset_sums_dp(f37(), alpha, 5));
}

}  // namespace

BENCHMARK(BM_NearestScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DependentColumnsSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DependentColumnsParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetSumsSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SubsetSumsParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SubsetSumsDp)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
