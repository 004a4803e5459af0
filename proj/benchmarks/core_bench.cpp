// Copyright 2026 The gdpkraus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "gdpk/channel_metrics.hpp"
#include "gdpk/entanglement.hpp"
#include "gdpk/gdp_model.hpp"
#include "gdpk/me2kraus.hpp"

namespace {

using namespace gdpk;

const MicroParams kBath = MicroParams::with_default_cap(50.0, 0.02, 1.0, 15.0);

void BM_MatExp4(benchmark::State& state) {
  const RMat l = generator_matrix(LocalGenerator{0.3, 1.2, 0.8});
  for (auto _ : state) benchmark::DoNotOptimize(mat_exp(l, 0.7));
}
BENCHMARK(BM_MatExp4);

void BM_PipelineKraus(benchmark::State& state) {
  const LocalGenerator g{0.3, 1.2, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(pipeline_kraus(g, 0.7));
}
BENCHMARK(BM_PipelineKraus);

void BM_ClosedFormKraus(benchmark::State& state) {
  const ChannelShape c{0.5, -0.4, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(gdp_kraus(c));
}
BENCHMARK(BM_ClosedFormKraus);

void BM_LambShift(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lamb_shift(kBath));
}
BENCHMARK(BM_LambShift)->Unit(benchmark::kMillisecond);

void BM_PairConcurrence(benchmark::State& state) {
  const PairModel m = pair_model_from_micro(10.0, 0.02, 15.0, 0.1, 0.2);
  const CVec bell = bell_phi_plus();
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(pair_state(m, ChannelKind::kGdp, 0.1, bell)));
}
BENCHMARK(BM_PairConcurrence);

void BM_SemiAxes(benchmark::State& state) {
  const KrausSet k = gdp_kraus(ChannelShape{0.5, -0.4, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(semi_axes(k));
}
BENCHMARK(BM_SemiAxes);

}  // namespace

BENCHMARK_MAIN();
