#include <benchmark/benchmark.h>

#include <random>

#include "qreg/matrix.hpp"

namespace {

template <class K>
qreg::Mat<K> random_matrix(int rows, int cols, double density, const qreg::FieldCtx<K>& ctx,
                           unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  qreg::Mat<K> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (coin(rng) < density) {
        m.set(r, c, ctx.from_long(static_cast<long>(rng() % 19) - 9));
      }
    }
  }
  return m;
}

void bm_rref_rational(benchmark::State& state) {
  auto ctx = qreg::make_rational_ctx();
  auto m = random_matrix<qreg::Rational>(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(0)), 0.1, ctx, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qreg::rref(m));
  }
}

void bm_rref_fp(benchmark::State& state) {
  auto ctx = qreg::make_fp_ctx(1000003);
  auto m = random_matrix<qreg::Fp>(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(0)), 0.1, ctx, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qreg::rref(m));
  }
}

void bm_kernel_fp(benchmark::State& state) {
  auto ctx = qreg::make_fp_ctx(1000003);
  auto m = random_matrix<qreg::Fp>(static_cast<int>(state.range(0)),
                                   2 * static_cast<int>(state.range(0)), 0.1, ctx, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qreg::kernel_basis(m, ctx));
  }
}

}  // namespace

BENCHMARK(bm_rref_rational)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bm_rref_fp)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_kernel_fp)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
