#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "qei/fresnel.hpp"
#include "qei/negative_energy.hpp"
#include "qei/observer_norm.hpp"
#include "qei/qei_bounds.hpp"
#include "qei/uniaxial_medium.hpp"

using namespace qei;

static void BM_FresnelEval(benchmark::State& st) {
  const FresnelContext ctx = uniaxial_context(1.0);
  Covec4 k(1.1, 0.3, -0.7, 0.2);
  for (auto _ : st) {
    benchmark::DoNotOptimize(fresnel_eval(ctx, k));
    k[1] += 1e-9;
  }
}
BENCHMARK(BM_FresnelEval);

static void BM_SecondAdjugate(benchmark::State& st) {
  const FresnelContext ctx = uniaxial_context(1.0);
  const Covec4 k(1.1, 0.3, -0.7, 0.2);
  for (auto _ : st) benchmark::DoNotOptimize(second_adjugate_Q(ctx, k));
}
BENCHMARK(BM_SecondAdjugate);

static void BM_ResidueCheck(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(residue_check(1.0, Eigen::Vector3d(0.3, 1.0, -0.2)));
}
BENCHMARK(BM_ResidueCheck)->Unit(benchmark::kMillisecond);

static void BM_AlephNumeric(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(aleph_uc(0.5, 0.8, 1.0, NormMode::Numeric));
}
BENCHMARK(BM_AlephNumeric);

static void BM_Pipeline(benchmark::State& st) {
  const SampledSmearing g = sample_gaussian(GaussianSmearing{1.0, 0.0});
  for (auto _ : st) benchmark::DoNotOptimize(qei_bound_pipeline(1.0, 0.4, 0.9, 1.0, g));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);

static void BM_AppendixA(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(appendix_a_oracle(Vec4(1, 0, 0, 0), Vec4(1, 0, 0, 0), 1.0, 1.0, MetricChoice::Zeta,
                                               static_cast<int>(st.range(0))));
}
BENCHMARK(BM_AppendixA)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_PacketField(benchmark::State& st) {
  const WavePacketSpec spec{1.0, std::asinh(2.0), std::numbers::pi / 2, 1.0};
  for (auto _ : st)
    benchmark::DoNotOptimize(field_strength_origin(spec, FieldMethod::Quadrature, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_PacketField)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
