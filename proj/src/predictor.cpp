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

#include "ssr/predictor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <iostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ssr/synth.hpp"

namespace ssr {

namespace {

constexpr int kFeatureDim = 25;
constexpr int kDepthClampMax = 25;  // n^2 bound for 5-qubit windows

GF2Matrix pad_to_5(const GF2Matrix &m) {
  if (m.dim() == 5) return m;
  GF2Matrix out = GF2Matrix::identity(5);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.set(i, j, m.get(i, j));
  return out;
}

ArchitectureGraph pad_graph_to_5(const ArchitectureGraph &ag) {
  if (ag.num_qubits() == 5) return ag;
  return ArchitectureGraph(5, ag.edges());
}

}  // namespace

std::vector<double> featurize(const GF2Matrix &m) {
  if (m.dim() > 5)
    throw InvalidArgument("featurization supports at most 5 qubits");
  GF2Matrix padded = pad_to_5(m);
  std::vector<double> features(kFeatureDim);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      features[i * 5 + j] = padded.get(i, j) ? 1.0 : 0.0;
  return features;
}

double loss(const std::vector<double> &preds, const std::vector<double> &labels,
            double beta) {
  if (preds.size() != labels.size())
    throw InvalidArgument("prediction/label length mismatch");
  if (preds.empty()) throw InvalidArgument("empty loss input");
  double total = 0.0;
  for (size_t i = 0; i < preds.size(); ++i) {
    double err = labels[i] - preds[i];
    double sq = err * err;
    total += preds[i] > labels[i] ? (1.0 + beta) * sq : sq;
  }
  return total / static_cast<double>(preds.size());
}

std::vector<LabeledSample> generate_dataset(
    const ArchitectureGraph &ag, int count, Rng &rng,
    const std::vector<GF2Matrix> &harvest) {
  if (count < 1) throw InvalidArgument("dataset size must be >= 1");
  int n = ag.num_qubits();
  if (n < 1 || n > 5)
    throw InvalidArgument("datasets are per 5-node (or smaller) topology");

  std::set<uint32_t> seen;
  std::vector<GF2Matrix> matrices;
  auto insert = [&](const GF2Matrix &m) {
    if (seen.insert(m.pack()).second) matrices.push_back(m);
  };
  insert(GF2Matrix::identity(n));
  for (const GF2Matrix &m : harvest) {
    if (m.dim() != n) throw InvalidArgument("harvested matrix dimension");
    insert(m);
  }
  const auto &edges = ag.edges();
  for (int i = 0; i < count; ++i) {
    GF2Matrix m = GF2Matrix::identity(n);
    if (!edges.empty()) {
      int ops = rng.uniform_int(1, 20);
      for (int k = 0; k < ops; ++k) {
        auto [a, b] = edges[rng.uniform_index(edges.size())];
        if (rng.coin(0.5)) std::swap(a, b);
        m.xor_rows(a, b);
      }
    }
    insert(m);
  }

  std::vector<uint8_t> table = bfs_distance_table(ag);
  std::vector<LabeledSample> dataset(matrices.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(matrices.size()); ++i) {
    uint8_t d = table[matrices[i].pack()];
    SSR_ASSERT(d != 0xff, "generated matrix must be reachable");
    dataset[i] = {matrices[i], d};
  }
  return dataset;
}

std::string dataset_to_text(const std::vector<LabeledSample> &dataset) {
  std::ostringstream out;
  for (const auto &sample : dataset) {
    GF2Matrix padded = pad_to_5(sample.matrix);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) out << (padded.get(i, j) ? '1' : '0');
    out << " " << sample.label << "\n";
  }
  return out.str();
}

double MlpModel::forward(const std::vector<double> &features) const {
  std::vector<double> act(features);
  for (size_t layer = 0; layer + 1 < layer_dims.size(); ++layer) {
    int in = layer_dims[layer], out_dim = layer_dims[layer + 1];
    std::vector<double> next(out_dim);
    for (int o = 0; o < out_dim; ++o) {
      double sum = biases[layer][o];
      const double *w = &weights[layer][static_cast<size_t>(o) * in];
      for (int i = 0; i < in; ++i) sum += w[i] * act[i];
      next[o] = layer + 2 < layer_dims.size() ? std::max(0.0, sum) : sum;
    }
    act = std::move(next);
  }
  return act[0];
}

namespace {

// Batched forward/backward over the whole dataset (full-batch training).
struct BatchNet {
  std::vector<int> dims;
  std::vector<Eigen::MatrixXd> weights;  // out x in
  std::vector<Eigen::VectorXd> biases;

  size_t param_count() const {
    size_t count = 0;
    for (size_t l = 0; l + 1 < dims.size(); ++l)
      count += static_cast<size_t>(dims[l]) * dims[l + 1] + dims[l + 1];
    return count;
  }

  void from_flat(const Eigen::VectorXd &theta) {
    size_t off = 0;
    for (size_t l = 0; l + 1 < dims.size(); ++l) {
      int in = dims[l], out = dims[l + 1];
      weights[l] = Eigen::Map<const Eigen::MatrixXd>(theta.data() + off, out, in);
      off += static_cast<size_t>(out) * in;
      biases[l] = theta.segment(off, out);
      off += out;
    }
  }

  Eigen::VectorXd to_flat() const {
    Eigen::VectorXd theta(param_count());
    size_t off = 0;
    for (size_t l = 0; l + 1 < dims.size(); ++l) {
      int in = dims[l], out = dims[l + 1];
      Eigen::Map<Eigen::MatrixXd>(theta.data() + off, out, in) = weights[l];
      off += static_cast<size_t>(out) * in;
      theta.segment(off, out) = biases[l];
      off += out;
    }
    return theta;
  }

  // Penalized MSE and its gradient at theta.
  double value_and_grad(const Eigen::VectorXd &theta, const Eigen::MatrixXd &x,
                        const Eigen::VectorXd &y, double beta,
                        Eigen::VectorXd &grad) {
    from_flat(theta);
    const int nsamples = static_cast<int>(x.cols());
    const size_t nlayers = dims.size() - 1;
    std::vector<Eigen::MatrixXd> acts(nlayers + 1);
    acts[0] = x;
    for (size_t l = 0; l < nlayers; ++l) {
      acts[l + 1] = (weights[l] * acts[l]).colwise() + biases[l];
      if (l + 1 < nlayers) acts[l + 1] = acts[l + 1].cwiseMax(0.0);
    }
    Eigen::VectorXd out = acts[nlayers].row(0);

    double total = 0.0;
    Eigen::VectorXd dout(nsamples);
    for (int i = 0; i < nsamples; ++i) {
      double err = out[i] - y[i];
      double w = out[i] > y[i] ? 1.0 + beta : 1.0;
      total += w * err * err;
      dout[i] = 2.0 * w * err / nsamples;
    }
    total /= nsamples;

    std::vector<Eigen::MatrixXd> wgrad(nlayers);
    std::vector<Eigen::VectorXd> bgrad(nlayers);
    Eigen::MatrixXd delta = dout.transpose();
    for (size_t l = nlayers; l-- > 0;) {
      wgrad[l] = delta * acts[l].transpose();
      bgrad[l] = delta.rowwise().sum();
      if (l > 0) {
        delta = weights[l].transpose() * delta;
        delta = delta.cwiseProduct(
            (acts[l].array() > 0.0).cast<double>().matrix());
      }
    }
    grad.resize(theta.size());
    size_t off = 0;
    for (size_t l = 0; l < nlayers; ++l) {
      int in = dims[l], out_dim = dims[l + 1];
      Eigen::Map<Eigen::MatrixXd>(grad.data() + off, out_dim, in) = wgrad[l];
      off += static_cast<size_t>(out_dim) * in;
      grad.segment(off, out_dim) = bgrad[l];
      off += out_dim;
    }
    return total;
  }
};

// L-BFGS with Armijo backtracking; the objective is nonconvex and piecewise
// smooth, so accepted iterates are forced monotone.
void lbfgs_minimize(BatchNet &net, Eigen::VectorXd &theta,
                    const Eigen::MatrixXd &x, const Eigen::VectorXd &y,
                    double beta, int max_iters, TrainStats *stats) {
  const int history = 10;
  std::deque<Eigen::VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;

  Eigen::VectorXd grad(theta.size());
  double f = net.value_and_grad(theta, x, y, beta, grad);
  if (stats) {
    stats->initial_loss = f;
    stats->loss_history.push_back(f);
  }
  if (!std::isfinite(f)) throw Error("non-finite training loss");

  for (int iter = 0; iter < max_iters; ++iter) {
    if (grad.norm() < 1e-10) break;

    // Two-loop recursion.
    Eigen::VectorXd q = grad;
    std::vector<double> alphas(s_hist.size());
    for (size_t i = s_hist.size(); i-- > 0;) {
      alphas[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alphas[i] * y_hist[i];
    }
    if (!s_hist.empty()) {
      double gamma = s_hist.back().dot(y_hist.back()) /
                     y_hist.back().squaredNorm();
      q *= gamma;
    }
    for (size_t i = 0; i < s_hist.size(); ++i) {
      double b = rho_hist[i] * y_hist[i].dot(q);
      q += (alphas[i] - b) * s_hist[i];
    }
    Eigen::VectorXd direction = -q;
    double slope = grad.dot(direction);
    if (slope >= 0.0) {  // fall back to steepest descent
      direction = -grad;
      slope = -grad.squaredNorm();
    }

    double step = 1.0;
    Eigen::VectorXd theta_new, grad_new(theta.size());
    double f_new = f;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving) {
      theta_new = theta + step * direction;
      f_new = net.value_and_grad(theta_new, x, y, beta, grad_new);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    Eigen::VectorXd s = theta_new - theta;
    Eigen::VectorXd dy = grad_new - grad;
    double sy = s.dot(dy);
    if (sy > 1e-12) {
      s_hist.push_back(s);
      y_hist.push_back(dy);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    theta = std::move(theta_new);
    grad = std::move(grad_new);
    f = f_new;
    if (stats) stats->loss_history.push_back(f);
  }
  if (stats) stats->final_loss = f;
}

}  // namespace

MlpModel train(const std::vector<LabeledSample> &dataset,
               const ArchitectureGraph &ag, const TrainParams &params,
               TrainStats *stats) {
  if (dataset.empty()) throw InvalidArgument("empty training dataset");
  if (params.beta <= 0.0) throw InvalidArgument("beta must be positive");

  BatchNet net;
  net.dims = {kFeatureDim, 200, 50, 100, 50, 1};
  net.weights.resize(net.dims.size() - 1);
  net.biases.resize(net.dims.size() - 1);

  const int nsamples = static_cast<int>(dataset.size());
  Eigen::MatrixXd x(kFeatureDim, nsamples);
  Eigen::VectorXd y(nsamples);
  for (int i = 0; i < nsamples; ++i) {
    std::vector<double> features = featurize(dataset[i].matrix);
    for (int j = 0; j < kFeatureDim; ++j) x(j, i) = features[j];
    y[i] = dataset[i].label;
  }

  // Seeded Glorot-style initialization.
  Rng rng(params.seed ^ 0x5eedULL);
  Eigen::VectorXd theta(net.param_count());
  {
    size_t off = 0;
    for (size_t l = 0; l + 1 < net.dims.size(); ++l) {
      int in = net.dims[l], out = net.dims[l + 1];
      double scale = std::sqrt(6.0 / (in + out));
      for (int k = 0; k < out * in; ++k)
        theta[off + k] = (2.0 * rng.uniform01() - 1.0) * scale;
      off += static_cast<size_t>(out) * in;
      for (int k = 0; k < out; ++k) theta[off + k] = 0.0;
      off += out;
    }
  }

  lbfgs_minimize(net, theta, x, y, params.beta, params.max_iters, stats);
  net.from_flat(theta);

  MlpModel model;
  model.ag_key = canonical_key(pad_graph_to_5(ag));
  model.layer_dims = net.dims;
  model.weights.resize(net.weights.size());
  model.biases.resize(net.biases.size());
  for (size_t l = 0; l < net.weights.size(); ++l) {
    const auto &w = net.weights[l];
    model.weights[l].resize(static_cast<size_t>(w.rows()) * w.cols());
    for (int r = 0; r < w.rows(); ++r)
      for (int cidx = 0; cidx < w.cols(); ++cidx)
        model.weights[l][static_cast<size_t>(r) * w.cols() + cidx] = w(r, cidx);
    model.biases[l].assign(net.biases[l].data(),
                           net.biases[l].data() + net.biases[l].size());
  }
  return model;
}

std::string save_model(const MlpModel &model) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["kind"] = "depth-predictor-mlp";
  doc["ag_key"] = model.ag_key;
  doc["layer_dims"] = model.layer_dims;
  doc["weights"] = model.weights;
  doc["biases"] = model.biases;
  return doc.dump(2) + "\n";
}

MlpModel load_model(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  MlpModel model;
  try {
    if (doc.at("schema").get<int>() != 1)
      throw ParseError("unsupported model schema version");
    if (doc.at("kind").get<std::string>() != "depth-predictor-mlp")
      throw ParseError("not a depth predictor model file");
    model.ag_key = doc.at("ag_key").get<std::string>();
    model.layer_dims = doc.at("layer_dims").get<std::vector<int>>();
    model.weights = doc.at("weights").get<std::vector<std::vector<double>>>();
    model.biases = doc.at("biases").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("model schema mismatch: ") + e.what());
  }
  if (model.layer_dims.size() < 2 ||
      model.weights.size() != model.layer_dims.size() - 1 ||
      model.biases.size() != model.layer_dims.size() - 1)
    throw ParseError("model schema mismatch: layer shape");
  for (size_t l = 0; l + 1 < model.layer_dims.size(); ++l) {
    size_t expect = static_cast<size_t>(model.layer_dims[l]) *
                    model.layer_dims[l + 1];
    if (model.weights[l].size() != expect ||
        model.biases[l].size() != static_cast<size_t>(model.layer_dims[l + 1]))
      throw ParseError("model schema mismatch: parameter count");
    for (double v : model.weights[l])
      if (!std::isfinite(v)) throw ParseError("non-finite model parameter");
  }
  return model;
}

int OraclePredictor::predict(const GF2Matrix &target,
                             const ArchitectureGraph &ag) {
  int n = target.dim();
  if (n > 5) throw InvalidArgument("predictor supports at most 5 qubits");
  if (target.is_identity()) return 0;
  std::string key = ag.to_edge_list();
  if (n <= 4) {
    auto it = tables_.find(key);
    if (it == tables_.end())
      it = tables_.emplace(key, bfs_distance_table(ag)).first;
    uint8_t d = it->second[target.pack()];
    if (d == 0xff)
      throw InvalidArgument("target unreachable on this architecture");
    return d;
  }
  auto &memo = memo_[key];
  auto hit = memo.find(target.pack());
  if (hit != memo.end()) return hit->second;
  int d = bidirectional_depth(target, ag);
  memo.emplace(target.pack(), d);
  return d;
}

void MlpPredictor::register_model(MlpModel model) {
  std::string key = model.ag_key;
  models_[key] = std::move(model);
}

int MlpPredictor::predict(const GF2Matrix &target,
                          const ArchitectureGraph &ag) {
  if (target.dim() > 5)
    throw InvalidArgument("predictor supports at most 5 qubits");
  if (target.is_identity()) return 0;
  std::string key = canonical_key(pad_graph_to_5(ag));
  auto it = models_.find(key);
  if (it == models_.end()) {
    if (!warned_[key]) {
      std::cerr << "note: no depth model for topology " << key
                << ", using the exact oracle\n";
      warned_[key] = true;
    }
    return fallback_.predict(target, ag);
  }
  double raw = it->second.forward(featurize(target));
  int rounded = static_cast<int>(std::lround(raw));
  return std::clamp(rounded, 0, kDepthClampMax);
}

}  // namespace ssr
