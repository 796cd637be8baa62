#include <benchmark/benchmark.h>

#include "skoszul/homology.hpp"
#include "skoszul/induced.hpp"
#include "skoszul/random_gen.hpp"

using namespace skoszul;

namespace {

const RingSpec kQ = RingSpec::rationals();
const RingSpec kGrassmann = RingSpec::grassmann(FieldSpec::rationals(), 4);

void BM_ScalarProduct(benchmark::State& state)
{
    Rng rng(1);
    Scalar a = random_homogeneous_scalar(rng, kGrassmann, Parity::even);
    Scalar b = random_homogeneous_scalar(rng, kGrassmann, Parity::even);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarProduct);

void BM_DeltaOnStrandBasis(benchmark::State& state)
{
    ComplexSpec spec = ComplexSpec::super_koszul(2, 2, kQ);
    StrandKey key{3, 3};
    StrandBasis basis = enumerate_strand(spec, key, 3);
    for (auto _ : state)
        for (const Monomial& m : basis.monomials)
            benchmark::DoNotOptimize(
                apply_delta(spec, SuperPoly::from_term(spec.registry, kQ, m, Scalar::one(kQ))));
}
BENCHMARK(BM_DeltaOnStrandBasis);

void BM_DifferentialMatrix(benchmark::State& state)
{
    ComplexSpec spec = ComplexSpec::super_koszul(2, 2, kQ);
    StrandKey key{3, 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(differential_matrix(spec, key, 3));
}
BENCHMARK(BM_DifferentialMatrix);

void BM_RankKernel(benchmark::State& state)
{
    ComplexSpec spec = ComplexSpec::super_koszul(2, 2, kQ);
    SparseMatrix m = differential_matrix(spec, {3, 3}, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_and_kernel(m));
    state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_RankKernel);

void BM_StrandHomology(benchmark::State& state)
{
    ComplexSpec spec = ComplexSpec::super_koszul(2, 2, kQ);
    StrandKey key{static_cast<long>(state.range(0)), static_cast<long>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(homology_of_strand(spec, key));
}
BENCHMARK(BM_StrandHomology)->Args({2, 2})->Args({3, 3});

void BM_FullWindowSweep(benchmark::State& state)
{
    ComplexSpec spec = ComplexSpec::super_koszul(2, 2, kQ);
    for (auto _ : state)
        for (StrandKey key : strand_window(spec, static_cast<int>(state.range(0))))
            benchmark::DoNotOptimize(homology_of_strand(spec, key));
}
BENCHMARK(BM_FullWindowSweep)->Arg(4)->Arg(6);

void BM_Berezinian(benchmark::State& state)
{
    Rng rng(7);
    SuperMatrix m = random_invertible_supermatrix(rng, kGrassmann, 2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(ber(m));
}
BENCHMARK(BM_Berezinian);

void BM_InducedActionTrial(benchmark::State& state)
{
    Rng rng(11);
    SuperMatrix m = random_invertible_supermatrix(rng, kGrassmann,
                                                  static_cast<int>(state.range(0)),
                                                  static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(induced_action_on_generator(m));
}
BENCHMARK(BM_InducedActionTrial)->Args({1, 1})->Args({2, 2});

} // namespace

BENCHMARK_MAIN();
