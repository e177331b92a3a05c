#include <benchmark/benchmark.h>

#include "vpa/classify.hpp"
#include "vpa/hurwitz.hpp"

using namespace vpa;

namespace {

std::vector<Scalar> ones(const FieldSpec& f, std::size_t n) {
    return std::vector<Scalar>(n, Scalar::one(f));
}

void BM_CheckAxioms_Dim7(benchmark::State& state, const FieldSpec& f) {
    auto algebra = construct_standard(f, ones(f, 3)).algebra;
    for (auto _ : state) {
        AxiomReport rep = check_axioms(algebra);
        benchmark::DoNotOptimize(rep.d2_ok);
    }
}
BENCHMARK_CAPTURE(BM_CheckAxioms_Dim7, rationals, FieldSpec::rationals());
BENCHMARK_CAPTURE(BM_CheckAxioms_Dim7, f7, FieldSpec::prime(7));

void BM_CheckAxioms_Dim15Double(benchmark::State& state) {
    auto f = FieldSpec::rationals();
    auto candidate = double_algebra(construct_standard(f, ones(f, 3)).algebra, Scalar::one(f));
    for (auto _ : state) {
        AxiomReport rep = check_axioms(candidate);
        benchmark::DoNotOptimize(rep.violations.size());
    }
}
BENCHMARK(BM_CheckAxioms_Dim15Double);

void BM_CompositionCheck_Dim8(benchmark::State& state) {
    auto f = FieldSpec::rationals();
    auto h = hurwitz(construct_standard(f, ones(f, 3)).algebra);
    for (auto _ : state) {
        CompositionReport rep = check_composition(h, 0);
        benchmark::DoNotOptimize(rep.composition_ok);
    }
}
BENCHMARK(BM_CompositionCheck_Dim8);

void BM_BuildIsomorphism_Dim7_F7(benchmark::State& state) {
    auto f = FieldSpec::prime(7);
    auto a = construct_standard(f, ones(f, 3)).algebra;
    std::vector<Scalar> norms = {Scalar::from_int(f, 2), Scalar::from_int(f, 3),
                                 Scalar::from_int(f, 5)};
    auto b = construct_standard(f, norms).algebra;
    for (auto _ : state) {
        IsoResult r = build_isomorphism(a, b);
        benchmark::DoNotOptimize(r.verdict);
    }
}
BENCHMARK(BM_BuildIsomorphism_Dim7_F7);

void BM_Double_Dim7To15(benchmark::State& state) {
    auto f = FieldSpec::rationals();
    auto seven = construct_standard(f, ones(f, 3)).algebra;
    for (auto _ : state) {
        auto candidate = double_algebra(seven, Scalar::one(f));
        benchmark::DoNotOptimize(candidate.dim());
    }
}
BENCHMARK(BM_Double_Dim7To15);

} // namespace

BENCHMARK_MAIN();
