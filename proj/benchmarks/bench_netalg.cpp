#include <benchmark/benchmark.h>

#include "netalg/estimators.hpp"
#include "netalg/graph_json.hpp"
#include "netalg/layer_algebra.hpp"
#include "netalg/log2_ops.hpp"
#include "netalg/model_zoo.hpp"
#include "netalg/shape_inference.hpp"

namespace {

const netalg::ActivationConstants& constants() {
  static const auto c = netalg::ActivationConstants::defaults();
  return c;
}

void BM_BuildResNet152(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(netalg::build_resnet(152));
}
BENCHMARK(BM_BuildResNet152);

void BM_InferShapesResNet152(benchmark::State& state) {
  const auto g = netalg::build_resnet(152);
  for (auto _ : state) benchmark::DoNotOptimize(netalg::infer_shapes(g));
}
BENCHMARK(BM_InferShapesResNet152);

void BM_GlobalMetricsResNet152(benchmark::State& state) {
  const auto g = netalg::infer_shapes(netalg::build_resnet(152));
  for (auto _ : state)
    benchmark::DoNotOptimize(netalg::global_metrics(g, {}, constants()));
}
BENCHMARK(BM_GlobalMetricsResNet152);

void BM_SerializeParseRoundTrip(benchmark::State& state) {
  const auto g = netalg::build_resnet(18);
  for (auto _ : state)
    benchmark::DoNotOptimize(netalg::parse_graph(netalg::serialize_graph(g)));
}
BENCHMARK(BM_SerializeParseRoundTrip);

void BM_CumulativeCurvesResNet50(benchmark::State& state) {
  const auto g = netalg::infer_shapes(netalg::build_resnet(50));
  for (auto _ : state)
    benchmark::DoNotOptimize(netalg::cumulative_curves(g, {}, constants()));
}
BENCHMARK(BM_CumulativeCurvesResNet50);

void BM_Log2Sum(benchmark::State& state) {
  std::vector<double> values;
  for (int i = 0; i < 1024; ++i) values.push_back(static_cast<double>((i * 37) % 999));
  for (auto _ : state) benchmark::DoNotOptimize(netalg::log2_sum(values));
}
BENCHMARK(BM_Log2Sum);

void BM_BoxFilterSmall(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(netalg::boxfilter_experiment(2000, 4, 64, 5));
}
BENCHMARK(BM_BoxFilterSmall);

void BM_ActivationEstimate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(netalg::estimate_activation_power(
        netalg::ActivationFn::relu, netalg::InputDistribution::standard_normal,
        netalg::RatioStatistic::std_ratio, 100000, 7));
}
BENCHMARK(BM_ActivationEstimate);

}  // namespace

BENCHMARK_MAIN();
