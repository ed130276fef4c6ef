#include <benchmark/benchmark.h>

#include "qmac/coding.hpp"
#include "qmac/entropy.hpp"
#include "qmac/region.hpp"
#include "qmac/rng.hpp"

namespace {

using namespace qmac;

SignalEnsemble mub_ensemble() {
    const double s = 1.0 / std::sqrt(2.0);
    SignalEnsemble e;
    e.alphabet_a = {"A", "B"};
    e.alphabet_b = {"C", "D"};
    e.dim = 2;
    e.p = {0.5, 0.5};
    e.q = {0.5, 0.5};
    ComplexVector v(2);
    v << 1.0, 0.0;
    e.states.push_back(v);
    v << 0.0, 1.0;
    e.states.push_back(v);
    v << s, s;
    e.states.push_back(v);
    v << s, -s;
    e.states.push_back(v);
    return e;
}

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    auto gen = trial_stream(seed, 0);
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = Complex(uniform_double(gen) - 0.5, uniform_double(gen) - 0.5);
        }
    }
    return (m + m.adjoint()).eval() / 2.0;
}

void BM_EigHermitian(benchmark::State& state) {
    const ComplexMatrix m = random_hermitian(static_cast<int>(state.range(0)), 9001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(m));
    }
}
BENCHMARK(BM_EigHermitian)->Arg(8)->Arg(32)->Arg(128);

void BM_ConditionalEntropies(benchmark::State& state) {
    const SignalEnsemble e = mub_ensemble();
    for (auto _ : state) {
        benchmark::DoNotOptimize(conditional_entropies(e));
    }
}
BENCHMARK(BM_ConditionalEntropies);

void BM_SsaWitness(benchmark::State& state) {
    const SignalEnsemble e = mub_ensemble();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssa_witness_check(e));
    }
}
BENCHMARK(BM_SsaWitness);

void BM_RegionUnionGrid(benchmark::State& state) {
    const SignalEnsemble e = mub_ensemble();
    SamplerPlan plan;
    plan.grid_step = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(region_union(e, plan));
    }
}
BENCHMARK(BM_RegionUnionGrid)->Arg(10)->Arg(20)->Arg(40);

void BM_ErrorProbability(benchmark::State& state) {
    const SignalEnsemble e = mub_ensemble();
    const int l = static_cast<int>(state.range(0));
    Codebook cb;
    cb.length_l = l;
    cb.alice_strings = {LetterString(static_cast<size_t>(l), "A"),
                        LetterString(static_cast<size_t>(l), "B")};
    LetterString alt(static_cast<size_t>(l), "C");
    alt[0] = "D";
    cb.bob_strings = {LetterString(static_cast<size_t>(l), "C"), alt};
    for (auto _ : state) {
        benchmark::DoNotOptimize(error_probability(e, cb, 1.0));
    }
}
BENCHMARK(BM_ErrorProbability)->Arg(2)->Arg(4)->Arg(6);

void BM_RandomCodeAverage(benchmark::State& state) {
    const SignalEnsemble e = mub_ensemble();
    const std::vector<LetterString> alice = {LetterString(3, "A")};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            random_code_average(e, alice, 2, 3, 1.0, 16, 42));
    }
}
BENCHMARK(BM_RandomCodeAverage);

}  // namespace

BENCHMARK_MAIN();
