#include <benchmark/benchmark.h>

#include "symco/characters.hpp"
#include "symco/dimensions.hpp"
#include "symco/extremal.hpp"
#include "symco/kronecker.hpp"
#include "symco/lr.hpp"
#include "symco/partition.hpp"
#include "symco/skew.hpp"

namespace {

using namespace symco;

void bm_partition_enumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(n));
}
BENCHMARK(bm_partition_enumeration)->Arg(20)->Arg(30)->Arg(40);

void bm_dim_scan(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(max_dim(n));
}
BENCHMARK(bm_dim_scan)->Arg(12)->Arg(16)->Arg(20);

void bm_character_value(benchmark::State& state) {
    Partition la = Partition::parse("6,5,4,3,2");
    Partition alpha = Partition::parse("5,4,3,3,2,2,1");
    for (auto _ : state) benchmark::DoNotOptimize(character_value(la, alpha));
}
BENCHMARK(bm_character_value);

void bm_kron_triple(benchmark::State& state) {
    Partition la = Partition::parse("5,3,2");
    for (auto _ : state) benchmark::DoNotOptimize(kronecker(la, la, la));
}
BENCHMARK(bm_kron_triple);

void bm_lr_expand(benchmark::State& state) {
    Partition la = Partition::parse("7,5,3,2,1");
    Partition mu = Partition::parse("5,3,2,1");
    for (auto _ : state) benchmark::DoNotOptimize(lr_expand(la, mu));
}
BENCHMARK(bm_lr_expand);

void bm_hive_count(benchmark::State& state) {
    Partition la = Partition::parse("6,4,2,2");
    Partition mu = Partition::parse("4,2,1");
    Partition nu = Partition::parse("4,2,1");
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient_hive(la, mu, nu));
}
BENCHMARK(bm_hive_count);

void bm_skew_determinant(benchmark::State& state) {
    SkewShape shape(Partition::parse("9,7,5,4,2,1"), Partition::parse("5,4,2,1"));
    for (auto _ : state) benchmark::DoNotOptimize(skew_syt_count(shape));
}
BENCHMARK(bm_skew_determinant);

void bm_cnk_row(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    // Row scans dominate table generation; measure one uncached row.
    for (auto _ : state) {
        auto lambdas = enumerate_partitions(n);
        Int best = 0;
        for (const auto& la : lambdas)
            for_each_subpartition(la, [&](const Partition& mu) {
                LRExpansion ex = lr_expand(la, mu);
                for (const auto& [nu, c] : ex.coeffs)
                    if (c > best) best = c;
            });
        benchmark::DoNotOptimize(best);
    }
}
BENCHMARK(bm_cnk_row)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}

