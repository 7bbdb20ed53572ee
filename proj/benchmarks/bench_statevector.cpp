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

#include "monarq/circuit.hpp"
#include "monarq/rng.hpp"
#include "monarq/sampling.hpp"
#include "monarq/statevector.hpp"

namespace {

using namespace monarq;

void BM_GateH(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  StateVector sv(width);
  const Gate gate = Gate::h(width / 2);
  for (auto _ : state) {
    sv.apply(gate);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (1LL << width));
}
BENCHMARK(BM_GateH)->DenseRange(14, 22, 2);

void BM_GateRY(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  StateVector sv(width);
  const Gate gate = Gate::ry(0.3, width / 2);
  for (auto _ : state) {
    sv.apply(gate);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (1LL << width));
}
BENCHMARK(BM_GateRY)->DenseRange(14, 22, 2);

void BM_GateCX(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  StateVector sv(width);
  const Gate gate = Gate::cx(0, width - 1);
  for (auto _ : state) {
    sv.apply(gate);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (1LL << width));
}
BENCHMARK(BM_GateCX)->DenseRange(14, 22, 2);

void BM_SampleCounts(benchmark::State& state) {
  const std::uint64_t shots = static_cast<std::uint64_t>(state.range(0));
  std::mt19937_64 rng(7);
  Circuit circuit(10);
  for (int q = 0; q < 10; ++q) circuit.h(q);
  for (int q = 0; q < 9; ++q) circuit.cx(q, q + 1);
  const StateVector sv = run_statevector(circuit);
  const std::vector<int> measured{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_counts(sv, measured, shots, seed++));
  }
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_SampleCounts)->Arg(100000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
