#include <benchmark/benchmark.h>

#include <random>

#include <polarbp/polarbp.hpp>

using namespace polarbp;

namespace {

AtomMatrix bench_atoms(Index d, Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(d, n);
    for (;;) {
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < n; ++j) m(i, j) = u(rng);
        AtomMatrix a{m};
        bool ok = rank(a.atoms) == d;
        for (Index j = 0; j < n && ok; ++j) ok = m.col(j).norm() > 0.1;
        if (ok) return a;
    }
}

Vector bench_signal(const AtomMatrix& a, Index sparsity, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    Vector x = Vector::Zero(a.n());
    for (Index k = 0; k < sparsity; ++k) x(k % a.n()) += u(rng);
    return a.atoms * x;
}

void bm_enumerate_polar_vertices(benchmark::State& state) {
    AtomMatrix a = bench_atoms(state.range(0), state.range(1), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_polar_vertices(a));
    }
}

void bm_basis_pursuit(benchmark::State& state) {
    AtomMatrix a = bench_atoms(state.range(0), state.range(1), 11);
    Vector y = bench_signal(a, state.range(0) - 1, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(basis_pursuit(a, y));
    }
}

void bm_omp(benchmark::State& state) {
    AtomMatrix a = bench_atoms(state.range(0), state.range(1), 13);
    Vector y = bench_signal(a, state.range(0) - 1, 14);
    for (auto _ : state) {
        benchmark::DoNotOptimize(omp(a, y, a.n()));
    }
}

void bm_certify(benchmark::State& state) {
    AtomMatrix a = bench_atoms(state.range(0), state.range(1), 15);
    std::mt19937 rng(16);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    Vector x0 = Vector::Zero(a.n());
    for (Index k = 0; k < state.range(0) - 1; ++k) x0(k) = u(rng);
    Representation rep = make_representation(x0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify(a, rep));
    }
}

void bm_brute_force_l1_oracle(benchmark::State& state) {
    AtomMatrix a = bench_atoms(state.range(0), state.range(1), 17);
    Vector y = bench_signal(a, state.range(0) - 1, 18);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_l1_oracle(a, y));
    }
}

}  // namespace

BENCHMARK(bm_enumerate_polar_vertices)->Args({2, 6})->Args({3, 8})->Args({4, 10});
BENCHMARK(bm_basis_pursuit)->Args({3, 8})->Args({5, 16})->Args({8, 32});
BENCHMARK(bm_omp)->Args({3, 8})->Args({5, 16})->Args({8, 32});
BENCHMARK(bm_certify)->Args({3, 8})->Args({4, 12});
BENCHMARK(bm_brute_force_l1_oracle)->Args({3, 8})->Args({4, 10});

BENCHMARK_MAIN();
