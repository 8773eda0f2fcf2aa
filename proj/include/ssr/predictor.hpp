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

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssr/arch.hpp"
#include "ssr/gf2.hpp"
#include "ssr/rng.hpp"

namespace ssr {

/// Optimal-depth estimation for CNOT windows on at most 5 qubits.
/// predict(identity, .) is 0 for every implementation.
class DepthPredictor {
 public:
  virtual ~DepthPredictor() = default;
  virtual int predict(const GF2Matrix &target, const ArchitectureGraph &ag) = 0;
};

/// 5x5 identity-padded matrix flattened row-major to {0.0, 1.0}; 25 values.
std::vector<double> featurize(const GF2Matrix &m);

/// Penalized MSE: squared error, weighted by (1+beta) for overestimates.
double loss(const std::vector<double> &preds, const std::vector<double> &labels,
            double beta);

struct LabeledSample {
  GF2Matrix matrix;  // n <= 5
  int label;         // exact optimal depth on the dataset's graph
};

/// Random invertible matrices from 1..20 random edge row operations, merged
/// with harvested ones, deduplicated, and labeled with exact optimal depths.
/// The identity (label 0) is always included.
std::vector<LabeledSample> generate_dataset(
    const ArchitectureGraph &ag, int count, Rng &rng,
    const std::vector<GF2Matrix> &harvest = {});

std::string dataset_to_text(const std::vector<LabeledSample> &dataset);

struct MlpModel {
  std::string ag_key;                      // canonical 5-node topology key
  std::vector<int> layer_dims;             // {25, 200, 50, 100, 50, 1}
  std::vector<std::vector<double>> weights;  // row-major, per layer
  std::vector<std::vector<double>> biases;

  double forward(const std::vector<double> &features) const;
};

struct TrainParams {
  double beta = 1.0;   // overestimation penalty, > 0
  int max_iters = 400;  // quasi-Newton iteration cap
  uint64_t seed = 0;
};

struct TrainStats {
  double initial_loss = 0.0;
  double final_loss = 0.0;
  std::vector<double> loss_history;  // accepted iterates, non-increasing
};

/// Full-batch L-BFGS on the penalized MSE from a seeded small random
/// initialization.
MlpModel train(const std::vector<LabeledSample> &dataset,
               const ArchitectureGraph &ag, const TrainParams &params,
               TrainStats *stats = nullptr);

std::string save_model(const MlpModel &model);
MlpModel load_model(const std::string &text);

/// Exact optimal depths from breadth-first search, memoized per topology.
class OraclePredictor : public DepthPredictor {
 public:
  int predict(const GF2Matrix &target, const ArchitectureGraph &ag) override;

 private:
  // full distance tables for n <= 4, per-query memo for n == 5
  std::map<std::string, std::vector<uint8_t>> tables_;
  std::map<std::string, std::unordered_map<uint32_t, int>> memo_;
};

/// MLP-backed estimates keyed by canonical 5-node topology; windows on fewer
/// qubits are identity-padded to 5. Falls back to the oracle (with a notice
/// on stderr) when no model is registered for a topology.
class MlpPredictor : public DepthPredictor {
 public:
  void register_model(MlpModel model);
  int predict(const GF2Matrix &target, const ArchitectureGraph &ag) override;

 private:
  std::map<std::string, MlpModel> models_;
  OraclePredictor fallback_;
  std::map<std::string, bool> warned_;
};

}  // namespace ssr
