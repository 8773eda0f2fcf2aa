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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ssr/driver.hpp"
#include "ssr/qasm.hpp"
#include "ssr/synth.hpp"
#include "ssr/verify.hpp"

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ssr::InvalidArgument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out) throw ssr::InvalidArgument("cannot write '" + path + "'");
  out << content;
}

// "grid RxC" (also "grid:RxC"/"gridRxC") or a path to an edge-list file.
ssr::ArchitectureGraph parse_ag(const std::string &spec) {
  std::string s = spec;
  if (s.rfind("grid", 0) == 0) {
    std::string dims = s.substr(4);
    if (!dims.empty() && (dims[0] == ' ' || dims[0] == ':'))
      dims = dims.substr(1);
    auto x = dims.find('x');
    if (x != std::string::npos) {
      try {
        int rows = std::stoi(dims.substr(0, x));
        int cols = std::stoi(dims.substr(x + 1));
        return ssr::ArchitectureGraph::grid(rows, cols);
      } catch (const std::exception &) {
        throw ssr::InvalidArgument("malformed grid spec '" + spec + "'");
      }
    }
  }
  return ssr::ArchitectureGraph::from_edge_list(read_file(spec));
}

std::unique_ptr<ssr::SatBackend> make_backend(const std::string &sat_exe) {
  if (sat_exe.empty()) return std::make_unique<ssr::CdclSolver>();
  return std::make_unique<ssr::SubprocessSolver>(sat_exe);
}

struct CommonOpts {
  std::string ag_spec;
  std::string sat_exe;
};

int run_optimize(const std::string &input, const std::string &output,
                 const CommonOpts &common, ssr::SsrParams params,
                 const std::vector<std::string> &model_paths,
                 const std::string &report_path) {
  ssr::ArchitectureGraph ag = parse_ag(common.ag_spec);
  ssr::Circuit circuit = ssr::parse_qasm(read_file(input));

  std::unique_ptr<ssr::DepthPredictor> predictor;
  if (params.predictor_mode == ssr::PredictorMode::Mlp) {
    auto mlp = std::make_unique<ssr::MlpPredictor>();
    for (const auto &path : model_paths)
      mlp->register_model(ssr::load_model(read_file(path)));
    predictor = std::move(mlp);
  } else {
    predictor = std::make_unique<ssr::OraclePredictor>();
  }
  auto backend = make_backend(common.sat_exe);

  auto [optimized, report] =
      ssr::ssr_optimize(circuit, ag, params, predictor.get(), backend.get());
  write_file(output, ssr::emit_qasm(optimized));
  if (!report_path.empty())
    write_file(report_path, ssr::report_to_json(report));
  std::cerr << "depth " << report.original_depth << " -> "
            << report.final_depth << " (" << std::fixed << std::setprecision(1)
            << 100.0 * report.depth_improvement_fraction << "% improvement), "
            << report.sat_calls << " SAT calls, " << report.outer_iterations
            << " iterations\n";
  return 0;
}

int run_synth(const std::string &matrix_path, const CommonOpts &common,
              const std::string &blocked_path) {
  ssr::ArchitectureGraph ag = parse_ag(common.ag_spec);
  ssr::GF2Matrix target = ssr::GF2Matrix::from_text(read_file(matrix_path));
  if (target.dim() != ag.num_qubits())
    throw ssr::InvalidArgument("matrix dimension differs from qubit count");
  if (target.dim() > 5)
    throw ssr::InvalidArgument("synthesis tool supports up to 5 qubits");
  if (!ssr::is_invertible(target))
    throw ssr::InvalidArgument("target matrix is singular");

  std::vector<ssr::BlockedPosition> blocked;
  if (!blocked_path.empty()) {
    std::istringstream in(read_file(blocked_path));
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream ls(line);
      int d, q;
      if (ls >> d >> q) blocked.push_back({d, q});
    }
  }

  // Unreachable targets (possible on disconnected graphs) get a clean error
  // instead of a futile climb through every depth.
  auto reachable = ssr::bfs_oracle(target, ag, ag.num_qubits() * ag.num_qubits());
  if (!reachable)
    throw ssr::InvalidArgument("target is not realizable on this graph");

  auto backend = make_backend(common.sat_exe);
  auto result = ssr::synthesize(target, ag, blocked, *reachable, *backend);
  if (!result) {
    std::cerr << "no circuit satisfies the blocked positions within the "
                 "depth cap\n";
    return 1;
  }
  std::cout << ssr::emit_qasm(result->circuit);
  std::cerr << "depth " << result->achieved_depth << ", " << result->sat_calls
            << " SAT calls\n";
  return 0;
}

int run_train(const CommonOpts &common, int count, double beta, uint64_t seed,
              const std::string &out_path) {
  ssr::ArchitectureGraph ag = parse_ag(common.ag_spec);
  if (ag.num_qubits() > 5)
    throw ssr::InvalidArgument("depth models are per 5-node topology");
  ssr::Rng rng(seed);
  auto dataset = ssr::generate_dataset(ag, count, rng);
  ssr::TrainParams params;
  params.beta = beta;
  params.seed = seed;
  ssr::TrainStats stats;
  ssr::MlpModel model = ssr::train(dataset, ag, params, &stats);
  write_file(out_path, ssr::save_model(model));
  std::cerr << "trained on " << dataset.size() << " samples, loss "
            << stats.initial_loss << " -> " << stats.final_loss << "\n";
  return 0;
}

int run_bench(const std::string &dir, const CommonOpts &common,
              ssr::SsrParams params, const std::string &report_path) {
  ssr::ArchitectureGraph ag = parse_ag(common.ag_spec);
  ssr::BenchmarkSummary summary = ssr::run_benchmark(dir, ag, params);
  std::cout << ssr::benchmark_to_text(summary);
  if (!report_path.empty())
    write_file(report_path, ssr::benchmark_to_json(summary));
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Depth optimizer for routed quantum circuits"};
  app.require_subcommand(1);

  CommonOpts common;
  ssr::SsrParams params;
  std::string input, output, report_path, matrix_path, blocked_path, dir,
      model_out;
  std::vector<std::string> model_paths;
  std::string predictor_name = "oracle";
  int train_count = 2000;
  double beta = 1.0;
  uint64_t seed = 0;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--ag", common.ag_spec,
                    "architecture: 'grid RxC' or an edge-list file")
        ->required();
    cmd->add_option("--sat-exe", common.sat_exe,
                    "external DIMACS solver executable (default: built-in)");
  };
  auto add_params = [&](CLI::App *cmd) {
    cmd->add_option("--nq", params.sweep.n_q, "max qubits per subcircuit");
    cmd->add_option("--nt", params.sweep.n_t, "selected fraction of windows");
    cmd->add_option("--alpha", params.ga.alpha, "fitness trade-off");
    cmd->add_option("--mu", params.ga.alpha_mu, "mutation rate");
    cmd->add_option("--nspecies", params.ga.n_species, "GA population size");
    cmd->add_option("--tmax", params.ga.t_max, "GA iteration cap");
    cmd->add_option("--tidle", params.ga.t_idle, "GA idle cap");
    cmd->add_option("--outer", params.max_outer_iters, "outer iteration cap");
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--predictor", predictor_name, "oracle|mlp");
    cmd->add_option("--model", model_paths, "depth model file (repeatable)");
    cmd->add_flag("--verify", params.safety_verify,
                  "check equivalence of every rewrite");
  };

  CLI::App *optimize = app.add_subcommand("optimize", "optimize one circuit");
  optimize->add_option("--input", input, "input QASM")->required();
  optimize->add_option("--output", output, "output QASM")->required();
  optimize->add_option("--report", report_path, "write a JSON report");
  add_common(optimize);
  add_params(optimize);

  CLI::App *synth = app.add_subcommand(
      "synth", "depth-optimal CNOT circuit for a GF(2) matrix");
  synth->add_option("--matrix", matrix_path, "matrix file (0/1 rows)")
      ->required();
  synth->add_option("--blocked", blocked_path, "blocked positions: 'd q' lines");
  add_common(synth);

  CLI::App *train = app.add_subcommand("train", "train a depth predictor");
  train->add_option("--count", train_count, "random samples to generate");
  train->add_option("--beta", beta, "overestimation penalty");
  train->add_option("--seed", seed, "random seed");
  train->add_option("--out", model_out, "model output file")->required();
  add_common(train);

  CLI::App *bench = app.add_subcommand("bench", "optimize a directory of QASM");
  bench->add_option("--dir", dir, "directory of .qasm files")->required();
  bench->add_option("--report", report_path, "write a JSON report");
  add_common(bench);
  add_params(bench);

  CLI11_PARSE(app, argc, argv);

  try {
    params.ga.seed = seed;
    params.seed = seed;
    if (predictor_name == "mlp")
      params.predictor_mode = ssr::PredictorMode::Mlp;
    else if (predictor_name != "oracle")
      throw ssr::InvalidArgument("predictor must be 'oracle' or 'mlp'");

    if (optimize->parsed())
      return run_optimize(input, output, common, params, model_paths,
                          report_path);
    if (synth->parsed()) return run_synth(matrix_path, common, blocked_path);
    if (train->parsed())
      return run_train(common, train_count, beta, seed, model_out);
    if (bench->parsed()) return run_bench(dir, common, params, report_path);
  } catch (const ssr::InternalError &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const ssr::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
