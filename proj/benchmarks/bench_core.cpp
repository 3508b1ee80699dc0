#include <benchmark/benchmark.h>

#include "majorlab/functional.hpp"
#include "majorlab/suites.hpp"

namespace {

using namespace majorlab;

void BM_HermitianEigen(benchmark::State& state) {
  RandomStream rs(7);
  const ComplexMatrix h = gen_hermitian(rs, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(8)->Arg(12);

void BM_Svd(benchmark::State& state) {
  RandomStream rs(7);
  const ComplexMatrix m = gen_general(rs, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd)->Arg(4)->Arg(8)->Arg(12);

void BM_Compound(benchmark::State& state) {
  RandomStream rs(7);
  const ComplexMatrix m = gen_general(rs, 6);
  for (auto _ : state) benchmark::DoNotOptimize(compound(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Compound)->Arg(2)->Arg(3);

void BM_EvaluateF(benchmark::State& state) {
  RandomStream rs(7);
  const int n = 4;
  FunctionalSpec spec{gen_psd(rs, n, SpectrumProfile::WellConditioned),
                      gen_psd(rs, n, SpectrumProfile::WellConditioned),
                      gen_general(rs, n),
                      1.0,
                      SymmetricNorm::trace_norm(),
                      Variant::TwoVar};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_logF(spec, 2.0, 1.5));
}
BENCHMARK(BM_EvaluateF);

void BM_RunCheckAraki(benchmark::State& state) {
  SweepParams params;
  params.dims = {4};
  uint64_t trial = 0;
  for (auto _ : state) {
    const Instance inst = gen_instance("araki", 11, trial++, params);
    benchmark::DoNotOptimize(run_check("araki", inst, 1e-9));
  }
}
BENCHMARK(BM_RunCheckAraki);

}  // namespace

BENCHMARK_MAIN();
