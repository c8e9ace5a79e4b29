#include <benchmark/benchmark.h>

#include <fusion/affine_char.hpp>
#include <fusion/basis_enum.hpp>
#include <fusion/decomposer.hpp>
#include <fusion/fermion_oracle.hpp>
#include <fusion/fusion_char.hpp>
#include <fusion/qseries.hpp>
#include <fusion/verlinde.hpp>

using namespace fusion;

namespace {

void BM_EulerInverseProduct(benchmark::State& state)
{
    const int qmax4 = static_cast<int>(state.range(0));
    const auto e = euler_inverse(qmax4);
    const auto b = q_binomial(12, 6, qmax4);
    for (auto _ : state)
        benchmark::DoNotOptimize(e * b);
}
BENCHMARK(BM_EulerInverseProduct)->Arg(80)->Arg(320);

void BM_FusionCharacter(benchmark::State& state)
{
    const AVector a({2, 3, 3, 4, 4});
    for (auto _ : state)
        benchmark::DoNotOptimize(fusion_character(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FusionCharacter)->Arg(80)->Arg(400);

void BM_LdCharacter(benchmark::State& state)
{
    const CompositionD d({0, 2, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(ld_character(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LdCharacter)->Arg(40)->Arg(80)->Arg(160);

void BM_IrrepCharacter(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(irrep_character({1, 3}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IrrepCharacter)->Arg(40)->Arg(80)->Arg(160);

void BM_DecomposeFull(benchmark::State& state)
{
    const CompositionD d({0, 4, 3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_full(d));
}
BENCHMARK(BM_DecomposeFull);

void BM_ReconstructionCheck(benchmark::State& state)
{
    const CompositionD d({0, 2, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(reconstruction_check(d, 80));
}
BENCHMARK(BM_ReconstructionCheck);

void BM_VerlindeCoefficients(benchmark::State& state)
{
    const CompositionD d({0, 5, 4, 3, 2, 1, 1, 0, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(verlinde_coefficients(d));
}
BENCHMARK(BM_VerlindeCoefficients);

void BM_WinfBasis(benchmark::State& state)
{
    const CompositionD d({0, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_winf_basis(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WinfBasis)->Arg(40)->Arg(80);

void BM_GradedSpan(benchmark::State& state)
{
    const AVector a({6, 6});
    for (auto _ : state)
        benchmark::DoNotOptimize(graded_span_character(a, 24, 40));
}
BENCHMARK(BM_GradedSpan);

void BM_SpanDimension(benchmark::State& state)
{
    const AVector a({2, 2, 3, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(span_dimension(a, 24));
}
BENCHMARK(BM_SpanDimension);

void BM_ExtremalModule(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(extremal_module_character({3, 2}, 24, 24));
}
BENCHMARK(BM_ExtremalModule);

}  // namespace

BENCHMARK_MAIN();
