// Copyright 2026 The Monarq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "monarq/pipelines.hpp"
#include "monarq/qcrank.hpp"
#include "monarq/rng.hpp"

namespace {

using namespace monarq;

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> values(n);
  for (double& v : values) v = 2.0 * uniform_double(rng) - 1.0;
  return values;
}

void BM_QcrankEncodeRun(benchmark::State& state) {
  const int n_a = static_cast<int>(state.range(0));
  const std::size_t length = std::size_t{1} << n_a;
  std::mt19937_64 rng(3);
  const std::vector<double> values = random_values(rng, length);
  const QcrankLayout layout = plan_layout(length, 2);
  const DataMatrix data =
      DataMatrix::from_sequences(layout, {values, values});
  for (auto _ : state) {
    Circuit circuit = build_qcrank(layout, data);
    benchmark::DoNotOptimize(run_statevector(circuit));
  }
}
BENCHMARK(BM_QcrankEncodeRun)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ConvExact(benchmark::State& state) {
  const std::size_t length = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  const std::vector<double> f = random_values(rng, length);
  const std::vector<double> g = random_values(rng, length);
  const PipelineJob job = build_conv(f, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(execute_job(job, 0, 0));
  }
}
BENCHMARK(BM_ConvExact)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ConvSampled(benchmark::State& state) {
  const std::uint64_t shots = static_cast<std::uint64_t>(state.range(0));
  std::mt19937_64 rng(7);
  const std::vector<double> f = random_values(rng, 32);
  const std::vector<double> g = random_values(rng, 32);
  const PipelineJob job = build_conv(f, g);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(execute_job(job, shots, seed++));
  }
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_ConvSampled)->Arg(32000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_EdgeTileExact(benchmark::State& state) {
  const int tile = static_cast<int>(state.range(0));
  GrayImage img = GrayImage::filled(tile, tile, 0.0);
  std::mt19937_64 rng(9);
  for (double& p : img.pixels) p = 2.0 * uniform_double(rng) - 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_edge_image(img, tile, tile, 1.0, {}));
  }
}
BENCHMARK(BM_EdgeTileExact)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
