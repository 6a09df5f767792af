#include <benchmark/benchmark.h>

#include "qreg/constructions.hpp"
#include "qreg/diagnostics.hpp"

namespace {

void bm_expand_polynomial(benchmark::State& state) {
  auto p = qreg::polynomial_algebra(2);
  auto ctx = qreg::make_rational_ctx();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qreg::expand(p, static_cast<int>(state.range(0)), ctx));
  }
}

void bm_expand_mckay(benchmark::State& state) {
  auto p = qreg::mckay_z2();
  auto ctx = qreg::make_rational_ctx();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qreg::expand(p, static_cast<int>(state.range(0)), ctx));
  }
}

void bm_expand_free_fp(benchmark::State& state) {
  auto p = qreg::free_algebra(2, qreg::FieldSpec::prime(65537));
  auto ctx = qreg::make_fp_ctx(65537);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qreg::expand(p, static_cast<int>(state.range(0)), ctx));
  }
}

void bm_classify_mckay(benchmark::State& state) {
  auto p = qreg::mckay_z2();
  auto ctx = qreg::make_rational_ctx();
  int trunc = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto a = qreg::expand(p, trunc, ctx);
    qreg::Analysis out;
    benchmark::DoNotOptimize(qreg::twisted_cy_classify(a, trunc, out));
  }
}

}  // namespace

BENCHMARK(bm_expand_polynomial)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_expand_mckay)->Arg(8)->Arg(12);
BENCHMARK(bm_expand_free_fp)->Arg(8)->Arg(10);
BENCHMARK(bm_classify_mckay)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
