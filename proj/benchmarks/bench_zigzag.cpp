#include <benchmark/benchmark.h>

#include "zigzag/decompose.hpp"
#include "zigzag/harness.hpp"
#include "zigzag/homology.hpp"
#include "zigzag/localize.hpp"

namespace {

using namespace zigzag;

void BM_decompose_planted(benchmark::State& state) {
    int length = int(state.range(0));
    SplitMix64 rng(2024);
    ZigzagType type = random_type(rng, length);
    PlantedInstance inst = plant(rng.next(), type, length, FieldSpec(5));
    for (auto _ : state) {
        auto res = decompose(inst.module);
        benchmark::DoNotOptimize(res.barcode.entries.data());
    }
}
BENCHMARK(BM_decompose_planted)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_localize_middle(benchmark::State& state) {
    int length = int(state.range(0));
    SplitMix64 rng(7);
    ZigzagType type = random_type(rng, length);
    PlantedInstance inst = plant(rng.next(), type, length, FieldSpec(2));
    int k = length / 2 + 1;
    for (auto _ : state) {
        auto res = localize_at(inst.module, k);
        benchmark::DoNotOptimize(res.intervals.entries.data());
    }
}
BENCHMARK(BM_localize_middle)->Arg(8)->Arg(16);

void BM_union_zigzag_h1(benchmark::State& state) {
    int n = int(state.range(0));
    SplitMix64 rng(99);
    std::vector<SimplicialComplex> seq;
    for (int i = 0; i < n; ++i) {
        std::vector<Simplex> simps;
        for (int t = 0; t < 8; ++t) {
            Simplex s;
            for (int v = 0; v < 3; ++v) s.push_back(int(rng.below(7)));
            simps.push_back(s);
        }
        seq.push_back(SimplicialComplex::build(7, simps));
    }
    for (auto _ : state) {
        ZigzagModule m = build_zigzag({seq, ZigzagMode::Union}, 1, FieldSpec(2));
        auto bc = barcode_of(m);
        benchmark::DoNotOptimize(bc.entries.data());
    }
}
BENCHMARK(BM_union_zigzag_h1)->Arg(2)->Arg(4)->Arg(6);

void BM_row_echelon(benchmark::State& state) {
    int n = int(state.range(0));
    SplitMix64 rng(5);
    Matrix m(FieldSpec(5), n, n);
    for (auto& v : m.a) v = std::uint32_t(rng.below(5));
    for (auto _ : state) {
        auto e = row_echelon(m);
        benchmark::DoNotOptimize(e.pivots.data());
    }
}
BENCHMARK(BM_row_echelon)->Arg(16)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
