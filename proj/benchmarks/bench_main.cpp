#include "gsr/estimators.hpp"
#include "gsr/filters.hpp"
#include "gsr/graph.hpp"
#include "gsr/kernels.hpp"
#include "gsr/mkl.hpp"
#include "gsr/spectral.hpp"
#include "gsr/synthdata.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace gsr;

Spectrum er_spectrum(Index n) { return eigendecompose(laplacian(erdos_renyi(n, 0.25, 42))); }

SampleSet samples_for(const Spectrum& spec, Index b, Index s) {
  const SignalInstance inst = make_instance(spec, low_pass_band(b), 10.0, 7);
  const std::vector<Index> idx = sample_uniform(spec.size(), s, 9);
  return SampleSet::make(spec.size(), idx, linalg::gather(inst.noisy_full, idx));
}

void BM_Eigendecompose(benchmark::State& state) {
  const Matrix l = laplacian(erdos_renyi(state.range(0), 0.25, 42));
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(l));
}
BENCHMARK(BM_Eigendecompose)->Arg(100)->Arg(250)->Unit(benchmark::kMillisecond);

void BM_Krr(benchmark::State& state) {
  const Index n = state.range(0);
  const Spectrum spec = er_spectrum(n);
  const KernelMatrix k = laplacian_kernel(spec, Diffusion{1.0});
  const SampleSet samples = samples_for(spec, 10, n * 2 / 5);
  for (auto _ : state) benchmark::DoNotOptimize(krr(k, samples, 1e-3));
}
BENCHMARK(BM_Krr)->Arg(100)->Arg(250)->Unit(benchmark::kMicrosecond);

void BM_KrrFull(benchmark::State& state) {
  const Index n = state.range(0);
  const Spectrum spec = er_spectrum(n);
  const KernelMatrix k = laplacian_kernel(spec, Diffusion{1.0});
  const SampleSet samples = samples_for(spec, 10, n * 2 / 5);
  for (auto _ : state) benchmark::DoNotOptimize(krr_full(k, samples, 1e-3));
}
BENCHMARK(BM_KrrFull)->Arg(100)->Arg(250)->Unit(benchmark::kMillisecond);

void BM_RsAdmm(benchmark::State& state) {
  const Spectrum spec = er_spectrum(100);
  const KernelDictionary dict = bandlimited_dictionary(spec, {10, 15, 20, 25, 30}, 1e4);
  const SampleSet samples = samples_for(spec, 20, state.range(0));
  RsOptions opts;
  opts.mu = 7e-4;
  opts.max_iter = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(rs_admm(dict, samples, opts));
}
BENCHMARK(BM_RsAdmm)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_KsIia(benchmark::State& state) {
  const Spectrum spec = er_spectrum(100);
  const KernelDictionary dict = bandlimited_dictionary(spec, {10, 15, 20, 25, 30}, 1e4);
  const SampleSet samples = samples_for(spec, 20, state.range(0));
  KsOptions opts;
  opts.mu = 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(ks_iia(dict, samples, opts));
}
BENCHMARK(BM_KsIia)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SmootherToFilter(benchmark::State& state) {
  const Spectrum spec = eigendecompose(laplacian(circular_graph(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(smoother_to_filter(spec, Diffusion{1.0}, 0.01));
}
BENCHMARK(BM_SmootherToFilter)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
