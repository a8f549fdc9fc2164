#include "fdt/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

namespace k = fdt::kernels;

std::vector<double> random_vector(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

template <auto Kernel>
void BM_convolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_vector(n, 1), b = random_vector(n, 2);
    std::vector<double> out(n);
    for (auto _ : state) {
        Kernel(a, b, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void BM_evaluate_many(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto coeff = random_vector(41, 3);
    std::vector<double> ts(n), out(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = double(i) / double(n);
    for (auto _ : state) {
        Kernel(coeff, 0.5, 0.0, ts, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_reversed_dot(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto w = random_vector(n, 4), f = random_vector(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(w, f));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_convolve<k::serial::convolve>)->Name("convolve/serial")->RangeMultiplier(4)->Range(64, 16384);
BENCHMARK(BM_convolve<k::parallel::convolve>)->Name("convolve/parallel")->RangeMultiplier(4)->Range(64, 16384);
BENCHMARK(BM_evaluate_many<k::serial::evaluate_many>)->Name("evaluate_many/serial")->RangeMultiplier(8)->Range(64, 262144);
BENCHMARK(BM_evaluate_many<k::parallel::evaluate_many>)->Name("evaluate_many/parallel")->RangeMultiplier(8)->Range(64, 262144);
BENCHMARK(BM_reversed_dot<k::serial::reversed_dot>)->Name("reversed_dot/serial")->RangeMultiplier(8)->Range(512, 1 << 21);
BENCHMARK(BM_reversed_dot<k::parallel::reversed_dot>)->Name("reversed_dot/parallel")->RangeMultiplier(8)->Range(512, 1 << 21);

BENCHMARK_MAIN();
