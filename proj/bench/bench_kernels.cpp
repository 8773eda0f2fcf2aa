// Copyright 2026 The SSR developers
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ssr/commute.hpp"
#include "ssr/synth.hpp"
#include "ssr/verify.hpp"
#include "../tests/testutil.hpp"

using namespace ssr;

namespace {

Circuit bench_circuit(int qubits, int gates, uint64_t seed) {
  Rng rng(seed);
  return test::random_circuit(qubits, gates, rng);
}

void BM_DistanceTable4_Serial(benchmark::State &state) {
  ArchitectureGraph ag = ArchitectureGraph::path(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(bfs_distance_table_serial(ag));
}
BENCHMARK(BM_DistanceTable4_Serial)->Unit(benchmark::kMillisecond);

void BM_DistanceTable4_Parallel(benchmark::State &state) {
  ArchitectureGraph ag = ArchitectureGraph::path(4);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distance_table(ag));
}
BENCHMARK(BM_DistanceTable4_Parallel)->Unit(benchmark::kMillisecond);

void BM_DistanceTable5_Serial(benchmark::State &state) {
  ArchitectureGraph ag = ArchitectureGraph::path(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(bfs_distance_table_serial(ag));
}
BENCHMARK(BM_DistanceTable5_Serial)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_DistanceTable5_Parallel(benchmark::State &state) {
  ArchitectureGraph ag = ArchitectureGraph::path(5);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distance_table(ag));
}
BENCHMARK(BM_DistanceTable5_Parallel)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void BM_Simulate_Serial(benchmark::State &state) {
  Circuit c = bench_circuit(12, 80, 1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_serial(c, 0));
}
BENCHMARK(BM_Simulate_Serial)->Unit(benchmark::kMillisecond);

void BM_Simulate_Parallel(benchmark::State &state) {
  Circuit c = bench_circuit(12, 80, 1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c, 0));
}
BENCHMARK(BM_Simulate_Parallel)->Unit(benchmark::kMillisecond);

void BM_Equivalent_Serial(benchmark::State &state) {
  Circuit a = bench_circuit(8, 40, 2);
  Circuit b = a;
  for (auto _ : state)
    benchmark::DoNotOptimize(equivalent_serial(a, b, 1e-9));
}
BENCHMARK(BM_Equivalent_Serial)->Unit(benchmark::kMillisecond);

void BM_Equivalent_Parallel(benchmark::State &state) {
  Circuit a = bench_circuit(8, 40, 2);
  Circuit b = a;
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b, 1e-9));
}
BENCHMARK(BM_Equivalent_Parallel)->Unit(benchmark::kMillisecond);

// One GA generation over a routed-style circuit; population evaluation is
// the parallel part.
void BM_GaGeneration(benchmark::State &state) {
  ArchitectureGraph ag = ArchitectureGraph::grid(3, 3);
  Rng rng(3);
  Circuit c = test::random_compliant_circuit(ag, 150, rng);
  GaParams params;
  params.t_max = 1;
  params.t_idle = 5;
  params.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(ga_optimize(c, ag, params, 5));
}
BENCHMARK(BM_GaGeneration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
