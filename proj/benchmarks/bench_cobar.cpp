#include "cobarlab/cobar.hpp"
#include "cobarlab/hga.hpp"
#include "cobarlab/sparse.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cobarlab;

static void BM_DoubleCobar(benchmark::State& state) {
    DgCoalgebra c = parse_coalgebra("field F2\nmaxdeg 12\ngen X 3\ngen Y 4\nprimitive\n");
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto w = CobarAlgebra::double_cobar(c, n);
        benchmark::DoNotOptimize(w->space().total_dim());
    }
}
BENCHMARK(BM_DoubleCobar)->Arg(6)->Arg(8)->Arg(10);

static void BM_Homology(benchmark::State& state) {
    DgCoalgebra c = parse_coalgebra("field Q\nmaxdeg 12\ngen X 3\ngen Y 4\nprimitive\n");
    auto w = CobarAlgebra::double_cobar(c, static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) {
        auto dims = w->complex().homology_dims(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(dims);
    }
}
BENCHMARK(BM_Homology)->Arg(6)->Arg(8);

static void BM_Rref(benchmark::State& state) {
    std::mt19937_64 rng(7);
    int n = static_cast<int>(state.range(0));
    SparseMat m(Field::Q, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (rng() % 4 == 0) m.set(r, c, Scalar::from_int(Field::Q, static_cast<long>(rng() % 7) - 3));
    for (auto _ : state) {
        Rref e = rref(m);
        benchmark::DoNotOptimize(e.rank());
    }
}
BENCHMARK(BM_Rref)->Arg(24)->Arg(48);

static void BM_Cup1Sweep(benchmark::State& state) {
    DgCoalgebra c = parse_coalgebra("field F2\nmaxdeg 12\ngen X 3\nprimitive\n");
    auto w = CobarAlgebra::double_cobar(c, 8);
    HgaOps ops(*w);
    for (auto _ : state) {
        long terms = 0;
        for (int dx = 1; dx <= 3; ++dx)
            for (const auto& x : w->words(dx))
                for (int dy = 1; dx + dy + 1 <= 7; ++dy)
                    for (const auto& y : w->words(dy))
                        terms += static_cast<long>(ops.cup1(x, y).size());
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_Cup1Sweep);

BENCHMARK_MAIN();
