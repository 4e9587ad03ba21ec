// Microbenchmarks for the hot paths: the Hermitian eigensolver, the
// supporting-line range sweep, the separable-range construction, and the
// seesaw optimizer.

#include <benchmark/benchmark.h>

#include <random>

#include "sepwit/optimizer.hpp"
#include "sepwit/presets.hpp"
#include "sepwit/range.hpp"

using namespace sepwit;

namespace {

HermitianOperator random_hermitian(std::mt19937_64& gen, std::size_t d) {
    std::normal_distribution<double> nd;
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = nd(gen);
        for (std::size_t j = i + 1; j < d; ++j) {
            m(i, j) = Complex(nd(gen), nd(gen));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return HermitianOperator(m);
}

void bm_eig_hermitian(benchmark::State& state) {
    std::mt19937_64 gen(1);
    const auto h = random_hermitian(gen, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(bm_eig_hermitian)->Arg(4)->Arg(9)->Arg(16);

void bm_joint_range(benchmark::State& state) {
    const auto pair = presets::pauli_xxzz();
    const auto h1 = pair.H1(), h2 = pair.H2();
    const auto angles = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(joint_range(h1, h2, angles));
}
BENCHMARK(bm_joint_range)->Arg(180)->Arg(720);

void bm_separable_range(benchmark::State& state) {
    const auto pair = presets::pauli_xxzz();
    const auto angles = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(separable_range(pair, angles));
}
BENCHMARK(bm_separable_range)->Arg(180)->Arg(720)->Unit(benchmark::kMillisecond);

void bm_sep_min(benchmark::State& state) {
    std::mt19937_64 gen(2);
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const ProductPair pair(random_hermitian(gen, d), random_hermitian(gen, d),
                           random_hermitian(gen, 2), random_hermitian(gen, 2));
    for (auto _ : state) benchmark::DoNotOptimize(sep_min(pair, 1.0, 1.0));
}
BENCHMARK(bm_sep_min)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_brute_force_oracle(benchmark::State& state) {
    std::mt19937_64 gen(3);
    const ProductPair pair(random_hermitian(gen, 2), random_hermitian(gen, 2),
                           random_hermitian(gen, 2), random_hermitian(gen, 2));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_sep_min(pair, 1.0, 1.0));
}
BENCHMARK(bm_brute_force_oracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
