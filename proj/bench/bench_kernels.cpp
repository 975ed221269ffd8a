// Conv kernels on one MNIST-sized layer: serial reference, BLAS-backed dense,
// and the sparse spike path at several input densities.

#include <benchmark/benchmark.h>

#include <random>

#include "snnpkit/kernels.hpp"

using namespace snnpkit;

namespace {

Tensor filled(const Shape& s, std::uint64_t seed, double density, bool binary) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Tensor t(s);
  for (double& v : t.storage()) {
    const double r = u(rng);
    v = binary ? (r < density ? 1.0 : 0.0) : r - 0.5;
  }
  return t;
}

struct Layer1 {
  Tensor x, w, b;
  explicit Layer1(double density)
      : x(filled({16, 32, 28, 28}, 1, density, true)), w(filled({32, 32, 3, 3}, 2, 0, false)), b(Shape{32}) {}
};

void BM_ConvReference(benchmark::State& st) {
  Layer1 l(st.range(0) / 100.0);
  for (auto _ : st) benchmark::DoNotOptimize(reference::conv2d_forward(l.x, l.w, l.b, 1, 1));
}

void BM_ConvDense(benchmark::State& st) {
  Layer1 l(st.range(0) / 100.0);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conv2d_forward(l.x, l.w, l.b, 1, 1));
}

void BM_ConvSparse(benchmark::State& st) {
  Layer1 l(st.range(0) / 100.0);
  const Tensor packed = sparse::pack_conv_weight(l.w);
  for (auto _ : st) benchmark::DoNotOptimize(sparse::conv2d_forward(l.x, packed, l.b, 3, 1, 1));
}

void BM_ConvWeightGrad(benchmark::State& st) {
  Layer1 l(st.range(0) / 100.0);
  const Tensor r = filled({16, 32, 28, 28}, 3, 0, false);
  for (auto _ : st) {
    if (st.range(1)) benchmark::DoNotOptimize(sparse::conv2d_weight_grad(l.x, r, 3, 1, 1));
    else benchmark::DoNotOptimize(kernels::conv2d_backward(l.x, l.w, r, 1, 1));
  }
}

}  // namespace

BENCHMARK(BM_ConvReference)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvDense)->Arg(5)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvSparse)->Arg(5)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvWeightGrad)->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
