#include <benchmark/benchmark.h>

#include <vector>

#include "pnn/kernels.hpp"
#include "pnn/rng.hpp"

namespace {

using namespace pnn;

constexpr std::size_t kInputs = 784;

struct Buffers {
  std::vector<double> w, b, x, delta, out, gw, gb, back;

  Buffers(std::size_t batch, std::size_t n_out)
      : w(n_out * kInputs), b(n_out), x(batch * kInputs), delta(batch * n_out), out(batch * n_out),
        gw(n_out * kInputs), gb(n_out), back(batch * kInputs) {
    RandomStream rng(1);
    for (auto* v : {&w, &b, &x, &delta}) {
      for (auto& e : *v) e = rng.normal();
    }
  }
};

// Arguments: batch size, output width (hidden neurons).
void set_flops(benchmark::State& state, std::size_t batch, std::size_t n_out) {
  state.counters["GFLOP/s"] = benchmark::Counter(
      2.0 * static_cast<double>(batch * n_out * kInputs) * static_cast<double>(state.iterations()),
      benchmark::Counter::kIsRate, benchmark::Counter::kIs1000);
}

template <bool Parallel>
void BM_Affine(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto n_out = static_cast<std::size_t>(state.range(1));
  Buffers buf(batch, n_out);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::affine(buf.w, buf.b, buf.x, batch, n_out, kInputs, buf.out);
    } else {
      kernels::reference::affine(buf.w, buf.b, buf.x, batch, n_out, kInputs, buf.out);
    }
    benchmark::DoNotOptimize(buf.out.data());
  }
  set_flops(state, batch, n_out);
}

template <bool Parallel>
void BM_WeightGradient(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto n_out = static_cast<std::size_t>(state.range(1));
  Buffers buf(batch, n_out);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::weight_gradient(buf.delta, buf.x, batch, n_out, kInputs, buf.gw, buf.gb);
    } else {
      kernels::reference::weight_gradient(buf.delta, buf.x, batch, n_out, kInputs, buf.gw, buf.gb);
    }
    benchmark::DoNotOptimize(buf.gw.data());
  }
  set_flops(state, batch, n_out);
}

template <bool Parallel>
void BM_Backpropagate(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto n_out = static_cast<std::size_t>(state.range(1));
  Buffers buf(batch, n_out);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::backpropagate(buf.w, buf.delta, batch, n_out, kInputs, buf.back);
    } else {
      kernels::reference::backpropagate(buf.w, buf.delta, batch, n_out, kInputs, buf.back);
    }
    benchmark::DoNotOptimize(buf.back.data());
  }
  set_flops(state, batch, n_out);
}

void shapes(benchmark::internal::Benchmark* b) {
  for (long hidden : {90, 270, 450}) b->Args({32, hidden});
  b->Args({256, 90});
}

}  // namespace

BENCHMARK(BM_Affine<false>)->Name("affine/reference")->Apply(shapes);
BENCHMARK(BM_Affine<true>)->Name("affine/openmp")->Apply(shapes);
BENCHMARK(BM_WeightGradient<false>)->Name("weight_gradient/reference")->Apply(shapes);
BENCHMARK(BM_WeightGradient<true>)->Name("weight_gradient/openmp")->Apply(shapes);
BENCHMARK(BM_Backpropagate<false>)->Name("backpropagate/reference")->Apply(shapes);
BENCHMARK(BM_Backpropagate<true>)->Name("backpropagate/openmp")->Apply(shapes);

BENCHMARK_MAIN();
