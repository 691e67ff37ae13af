// Parallel kernels against their serial references.

#include "wmp/rf_matrix.hpp"
#include "wmp/wmp_polynomial.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace wmp;

UniPoly random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<BigRational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = coef(rng);
    return UniPoly(std::move(c));
}

RfMatrix random_rf(std::size_t n, int degree, unsigned seed) {
    std::mt19937 rng(seed);
    RfMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            UniPoly den = random_poly(rng, degree);
            if (den.is_zero()) den = UniPoly{1};
            a(r, c) = RatFun::make(random_poly(rng, degree), den);
        }
    return a;
}

PolyMatrix random_poly_matrix(std::size_t n, int degree, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coef(-99, 99);
    std::vector<QMatrix> coeffs(static_cast<std::size_t>(degree) + 1, QMatrix(n, n));
    for (auto& m : coeffs)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = coef(rng);
    return PolyMatrix(n, n, std::move(coeffs));
}

void BM_MatMul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RfMatrix a = random_rf(n, 3, 1), b = random_rf(n, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
}

void BM_MatMulSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RfMatrix a = random_rf(n, 3, 1), b = random_rf(n, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mat_mul_serial(a, b));
}

void BM_Conv(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    PolyMatrix a = random_poly_matrix(n, 24, 3), b = random_poly_matrix(n, 24, 4);
    for (auto _ : state) benchmark::DoNotOptimize(conv(a, b));
}

void BM_ConvSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    PolyMatrix a = random_poly_matrix(n, 24, 3), b = random_poly_matrix(n, 24, 4);
    for (auto _ : state) benchmark::DoNotOptimize(conv_serial(a, b));
}

} // namespace

BENCHMARK(BM_MatMul)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatMulSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Conv)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
