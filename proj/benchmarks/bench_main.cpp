#include <benchmark/benchmark.h>

#include <random>

#include "schurtab/characters.hpp"
#include "schurtab/enumerate.hpp"
#include "schurtab/straighten.hpp"
#include "schurtab/tensor_oracle.hpp"

using namespace schurtab;

static void BM_EnumerateSymplectic(benchmark::State& state) {
    Shape shape(Partition{2, 2}, 2);
    for (auto _ : state) {
        auto basis = enumerateBasis(shape, BasisFamily::Symplectic);
        benchmark::DoNotOptimize(basis.size());
    }
}
BENCHMARK(BM_EnumerateSymplectic);

static void BM_RelationSpanOddOrthogonal(benchmark::State& state) {
    for (auto _ : state) {
        TensorOracle oracle(Shape(Partition{2, 1}, 2), {Group::OOdd, 2});
        benchmark::DoNotOptimize(oracle.quotientDimension());
    }
}
BENCHMARK(BM_RelationSpanOddOrthogonal);

static void BM_SymplecticStraighten(benchmark::State& state) {
    Shape shape(Partition{2, 2}, 2);
    Alphabet a(AlphabetKind::Symplectic, 2);
    std::mt19937_64 rng(7);
    std::vector<FormalSum> inputs;
    for (int i = 0; i < 64;) {
        Filling f(shape);
        for (int k = 0; k < shape.boxCount(); ++k) {
            Box b = shape.boxAt(k);
            f.setAt(b.row, b.col, a.symbolAt(static_cast<int>(rng() % a.size())));
        }
        if (auto canon = canonicalizeSigned(f)) {
            inputs.emplace_back(canon->filling);
            ++i;
        }
    }
    std::size_t next = 0;
    for (auto _ : state) {
        auto rep = symplecticStraighten(inputs[next++ % inputs.size()]);
        benchmark::DoNotOptimize(rep.steps);
    }
}
BENCHMARK(BM_SymplecticStraighten);

static void BM_CharacterB3(benchmark::State& state) {
    for (auto _ : state) {
        Laurent chi = character({RootFamily::B, 3}, {4, 2, 2});
        benchmark::DoNotOptimize(chi.terms().size());
    }
}
BENCHMARK(BM_CharacterB3);

BENCHMARK_MAIN();
