#include "twoalg/equivalence.hpp"
#include "twoalg/howell.hpp"
#include "twoalg/mult_alg.hpp"
#include "twoalg/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace twoalg;

static void BM_HowellForm(benchmark::State& state) {
    std::mt19937 rng(7);
    Coeff m = 6;
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<Vec> rows(n, Vec(n));
    for (auto& r : rows)
        for (auto& x : r) x = static_cast<Coeff>(rng() % 6);
    for (auto _ : state) benchmark::DoNotOptimize(howell_form(rows, m, n));
}
BENCHMARK(BM_HowellForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_MultiplicationTwoAlgebra(benchmark::State& state) {
    FiniteAlgebra c = FiniteAlgebra::dual_numbers(2);
    for (auto _ : state) benchmark::DoNotOptimize(multiplication_two_algebra(c));
}
BENCHMARK(BM_MultiplicationTwoAlgebra);

static void BM_RoundtripXmod(benchmark::State& state) {
    CrossedModule x = from_ideal(FiniteAlgebra::dual_numbers(2), {Vec{0, 1}});
    for (auto _ : state) benchmark::DoNotOptimize(roundtrip_xmod(x));
}
BENCHMARK(BM_RoundtripXmod);

static void BM_CensusRank1(benchmark::State& state) {
    FiniteAlgebra r = FiniteAlgebra::ground(2);
    FiniteAlgebra c = FiniteAlgebra::zero_multiplication(2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_crossed_modules(r, c, kDefaultCap));
}
BENCHMARK(BM_CensusRank1);

BENCHMARK_MAIN();
