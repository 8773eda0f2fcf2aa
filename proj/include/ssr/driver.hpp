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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssr/arch.hpp"
#include "ssr/circuit.hpp"
#include "ssr/commute.hpp"
#include "ssr/predictor.hpp"
#include "ssr/sat.hpp"
#include "ssr/sweep.hpp"

namespace ssr {

enum class PredictorMode { Oracle, Mlp };

struct SsrParams {
  GaParams ga;
  SweepParams sweep;
  PredictorMode predictor_mode = PredictorMode::Oracle;
  int max_outer_iters = 20;
  uint64_t seed = 0;
  bool safety_verify = false;
};

struct OptimizationReport {
  int original_depth = 0;
  int final_depth = 0;
  int original_gate_count = 0;  // after SWAP decomposition
  int final_gate_count = 0;
  double depth_improvement_fraction = 0.0;  // (ori - opt) / ori
  double gate_improvement_fraction = 0.0;
  int sat_calls = 0;
  double runtime_seconds = 0.0;
  int outer_iterations = 0;
};

std::string report_to_json(const OptimizationReport &report,
                           bool include_runtime = true);

/// The outer optimization loop: GA commutation, sweep, predict, select,
/// SAT-rewrite with blocked positions; a rewrite or GA result is committed
/// only when the whole-circuit depth does not increase, and iteration stops
/// when a full pass yields no depth reduction. Every two-qubit gate of the
/// input must lie on an architecture edge.
std::pair<Circuit, OptimizationReport> ssr_optimize(
    const Circuit &c0, const ArchitectureGraph &ag, const SsrParams &params,
    DepthPredictor *predictor = nullptr, SatBackend *backend = nullptr);

/// Fixture router for tests and demos: identity initial mapping, SWAPs along
/// shortest paths for each non-compliant two-qubit gate.
Circuit naive_route(const Circuit &logical, const ArchitectureGraph &ag,
                    uint64_t seed);

bool hardware_compliant(const Circuit &c, const ArchitectureGraph &ag);

struct BenchmarkEntry {
  std::string file;
  bool ok = false;
  std::string error;
  OptimizationReport report;
};

struct BenchmarkSummary {
  std::vector<BenchmarkEntry> entries;
  double geomean_depth_ratio = 1.0;  // geometric mean of final/original
  double geomean_depth_improvement = 0.0;  // 1 - geomean ratio
  double geomean_gate_ratio = 1.0;
  double geomean_gate_improvement = 0.0;
  int total_sat_calls = 0;
};

/// Optimizes every .qasm file in a directory (sorted by name); per-file
/// failures are recorded, not fatal.
BenchmarkSummary run_benchmark(const std::string &directory,
                               const ArchitectureGraph &ag,
                               const SsrParams &params);

std::string benchmark_to_json(const BenchmarkSummary &summary,
                              bool include_runtime = true);
std::string benchmark_to_text(const BenchmarkSummary &summary);

}  // namespace ssr
