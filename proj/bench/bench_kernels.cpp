// OpenMP kernels against their serial references
#include <benchmark/benchmark.h>

#include <random>

#include "homcat/exactlin.hpp"
#include "homcat/fixtures.hpp"
#include "homcat/pipeline.hpp"

using namespace homcat;

namespace {

LinearMap random_map(std::size_t rows, std::size_t cols, unsigned seed, double fill) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 7);
    LinearMap f(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (u(rng) < fill) {
                Scalar v(num(rng), den(rng));
                v.canonicalize();
                f.set(i, j, v);
            }
    return f;
}

void BM_compose_parallel(benchmark::State& s) {
    auto n = static_cast<std::size_t>(s.range(0));
    auto f = random_map(n, n, 1, 0.3), g = random_map(n, n, 2, 0.3);
    for (auto _ : s) benchmark::DoNotOptimize(compose(f, g));
}

void BM_compose_serial(benchmark::State& s) {
    auto n = static_cast<std::size_t>(s.range(0));
    auto f = random_map(n, n, 1, 0.3), g = random_map(n, n, 2, 0.3);
    for (auto _ : s) benchmark::DoNotOptimize(serial::compose(f, g));
}

void BM_tensor_parallel(benchmark::State& s) {
    auto n = static_cast<std::size_t>(s.range(0));
    auto f = random_map(n, n, 3, 0.5), g = random_map(n, n, 4, 0.5);
    for (auto _ : s) benchmark::DoNotOptimize(tensor_map(f, g));
}

void BM_tensor_serial(benchmark::State& s) {
    auto n = static_cast<std::size_t>(s.range(0));
    auto f = random_map(n, n, 3, 0.5), g = random_map(n, n, 4, 0.5);
    for (auto _ : s) benchmark::DoNotOptimize(serial::tensor_map(f, g));
}

// hom-associativity of the twisted Sweedler algebra, pipeline against materialized maps
void BM_associativity_pipeline(benchmark::State& s) {
    auto H = fixtures::h4_alpha2().H;
    const auto& A = H.algebra();
    for (auto _ : s) {
        Pipeline p({4, 4, 4});
        p.apply(1, 2, A.mult, {4}).apply(0, A.twist.map()).apply(0, 2, A.mult, {4});
        benchmark::DoNotOptimize(p.to_map());
    }
}

void BM_associativity_materialized(benchmark::State& s) {
    auto H = fixtures::h4_alpha2().H;
    const auto& A = H.algebra();
    for (auto _ : s)
        benchmark::DoNotOptimize(compose(A.mult, tensor_map(A.twist.map(), A.mult)));
}

}  // namespace

BENCHMARK(BM_compose_parallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_compose_serial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_tensor_parallel)->Arg(8)->Arg(16);
BENCHMARK(BM_tensor_serial)->Arg(8)->Arg(16);
BENCHMARK(BM_associativity_pipeline);
BENCHMARK(BM_associativity_materialized);

BENCHMARK_MAIN();
