// Serial reference kernels against their OpenMP versions.

#include "qsb/evaluate.hpp"
#include "qsb/sparse.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qsb;

namespace {

Mat random_mat(int r, int c, unsigned seed) {
    std::mt19937 g(seed);
    std::uniform_int_distribution<int> coef(-3, 3), ex(-4, 4), keep(0, 9);
    Mat m(r, c);
    for (auto& e : m.entries())
        if (keep(g) < 6) e = Scalar(coef(g)) * Scalar::u_pow(ex(g)) + Scalar::u_pow(ex(g));
    return m;
}

void BM_matmul_serial(benchmark::State& st) {
    int n = int(st.range(0));
    Mat a = random_mat(n, n, 1), b = random_mat(n, n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(matmul_serial(a, b));
}

void BM_matmul_parallel(benchmark::State& st) {
    int n = int(st.range(0));
    Mat a = random_mat(n, n, 1), b = random_mat(n, n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(matmul(a, b));
}

void BM_kron_serial(benchmark::State& st) {
    int n = int(st.range(0));
    Mat a = random_mat(n, n, 3), b = random_mat(n, n, 4);
    for (auto _ : st) benchmark::DoNotOptimize(kron_serial(a, b));
}

void BM_kron_parallel(benchmark::State& st) {
    int n = int(st.range(0));
    Mat a = random_mat(n, n, 3), b = random_mat(n, n, 4);
    for (auto _ : st) benchmark::DoNotOptimize(kron(a, b));
}

// The evaluator's leaf step: xSS applied in the middle of S S S S at N = 5.
struct BlockCase {
    SMat<Scalar> g, m;
    long l, r;
    BlockCase() {
        g = generator_matrix(5, 1, "xSS");
        long d = obj_dim(5, "S");
        l = d;
        r = d;
        m = SMat<Scalar>::identity(int(l * g.cols() * r));
    }
};

void BM_apply_block_serial(benchmark::State& st) {
    BlockCase c;
    for (auto _ : st) benchmark::DoNotOptimize(apply_block_serial(c.g, c.m, c.l, c.r));
}

void BM_apply_block_parallel(benchmark::State& st) {
    BlockCase c;
    for (auto _ : st) benchmark::DoNotOptimize(apply_block(c.g, c.m, c.l, c.r));
}

}  // namespace

BENCHMARK(BM_matmul_serial)->Arg(16)->Arg(32);
BENCHMARK(BM_matmul_parallel)->Arg(16)->Arg(32);
BENCHMARK(BM_kron_serial)->Arg(8)->Arg(16);
BENCHMARK(BM_kron_parallel)->Arg(8)->Arg(16);
BENCHMARK(BM_apply_block_serial);
BENCHMARK(BM_apply_block_parallel);

BENCHMARK_MAIN();
