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

#include "ssr/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ssr/qasm.hpp"
#include "ssr/synth.hpp"
#include "ssr/verify.hpp"

namespace ssr {

bool hardware_compliant(const Circuit &c, const ArchitectureGraph &ag) {
  for (const Gate &g : c.gates())
    if (is_two_qubit(g.kind) && !ag.has_edge(g.q0, g.q1)) return false;
  return true;
}

namespace {

nlohmann::json report_json_object(const OptimizationReport &r,
                                  bool include_runtime) {
  nlohmann::json doc;
  doc["original_depth"] = r.original_depth;
  doc["final_depth"] = r.final_depth;
  doc["original_gate_count"] = r.original_gate_count;
  doc["final_gate_count"] = r.final_gate_count;
  doc["depth_improvement_fraction"] = r.depth_improvement_fraction;
  doc["gate_improvement_fraction"] = r.gate_improvement_fraction;
  doc["sat_calls"] = r.sat_calls;
  doc["outer_iterations"] = r.outer_iterations;
  if (include_runtime) doc["runtime_seconds"] = r.runtime_seconds;
  return doc;
}

// Counts every backend invocation, including trials of rewrites that end
// up rejected or infeasible.
class CountingBackend : public SatBackend {
 public:
  explicit CountingBackend(SatBackend &inner) : inner_(inner) {}
  SatResult solve(const CnfFormula &formula) override {
    ++calls;
    return inner_.solve(formula);
  }
  int calls = 0;

 private:
  SatBackend &inner_;
};

Circuit window_local_circuit(const Circuit &c, const SubcircuitWindow &w) {
  std::map<int, int> local;
  for (size_t i = 0; i < w.qubits.size(); ++i)
    local[w.qubits[i]] = static_cast<int>(i);
  Circuit sub(static_cast<int>(w.qubits.size()));
  for (int id : w.gate_ids) {
    const Gate &g = c.gate(c.position_of(id));
    sub.add(g.kind, local.at(g.q0), local.at(g.q1));
  }
  return sub;
}

// Refreshes positions, anchor and span of a window after earlier rewrites
// remapped gate ids.
bool refresh_window(const Circuit &c, SubcircuitWindow &w) {
  std::vector<bool> in_window(c.size(), false);
  for (int id : w.gate_ids) {
    if (id < 0 || id >= static_cast<int>(c.size())) return false;
    in_window[id] = true;
  }
  std::vector<int> positions;
  for (size_t p = 0; p < c.size(); ++p)
    if (in_window[c.gate(p).id]) positions.push_back(static_cast<int>(p));
  if (positions.size() != w.gate_ids.size()) return false;

  w.gate_ids.clear();
  for (int p : positions) w.gate_ids.push_back(c.gate(p).id);
  size_t kept_before = 0;
  for (int p = 0; p < positions.front(); ++p)
    if (!in_window[c.gate(p).id]) ++kept_before;
  w.anchor = kept_before;

  Layering host = layering(c);
  w.span_start = std::numeric_limits<int>::max();
  w.span_end = 0;
  for (int p : positions) {
    const Gate &g = c.gate(p);
    int start = host.layer_of[g.id];
    w.span_start = std::min(w.span_start, start);
    w.span_end = std::max(w.span_end, start + g.duration());
  }
  return window_contiguous(c, w.gate_ids);
}

}  // namespace

std::string report_to_json(const OptimizationReport &report,
                           bool include_runtime) {
  return report_json_object(report, include_runtime).dump(2) + "\n";
}

std::pair<Circuit, OptimizationReport> ssr_optimize(
    const Circuit &c0, const ArchitectureGraph &ag, const SsrParams &params,
    DepthPredictor *predictor, SatBackend *backend) {
  auto t0 = std::chrono::steady_clock::now();
  if (!hardware_compliant(c0, ag))
    throw InvalidArgument("input circuit violates the architecture graph");

  OraclePredictor default_predictor;
  CdclSolver default_backend;
  DepthPredictor &pred = predictor ? *predictor : default_predictor;
  CountingBackend sat(backend ? *backend : default_backend);

  OptimizationReport report;
  report.original_depth = depth(c0);
  report.original_gate_count = static_cast<int>(decompose_swaps(c0).size());

  Circuit cur = c0;
  Rng master(params.seed);
  int iter = 0;
  for (; iter < params.max_outer_iters; ++iter) {
    int depth_before = depth(cur);

    // (1) Commutation search; the result replaces the working circuit
    // unless it would deepen it (possible when r_sub gains beat a depth
    // loss in the fitness trade-off).
    GaParams ga = params.ga;
    ga.seed = master.split(0x6a0 + iter).next();
    GaResult ga_result = ga_optimize(cur, ag, ga, params.sweep.n_q);
    if (depth(ga_result.circuit) <= depth(cur))
      cur = std::move(ga_result.circuit);

    // (2) Sweep for CNOT/SWAP windows and (3) score them.
    std::vector<SubcircuitWindow> windows =
        extract_subcircuits(cur, ag, params.sweep.n_q);
    std::vector<SubcircuitScore> scores;
    scores.reserve(windows.size());
    for (const auto &w : windows) scores.push_back(score_window(cur, ag, w, pred));

    // (4) Take the best fraction, highest score first.
    std::vector<SubcircuitWindow> selected = select_top(scores, params.sweep.n_t);

    // (5) Rewrite each selected window, committing only non-deepening
    // results; commits remap the ids of windows still pending.
    for (SubcircuitWindow &w : selected) {
      if (!refresh_window(cur, w)) continue;
      Circuit local = window_local_circuit(cur, w);
      GF2Matrix target = from_circuit(local, local.num_qubits());
      auto [wag, mapping] = induced_subgraph(ag, w.qubits);
      int horizon = w.span_length();
      std::vector<BlockedPosition> blocked = blocked_positions(cur, w, horizon);
      int d_pred = pred.predict(target, wag);
      auto synth = synthesize(target, wag, blocked, d_pred, sat, horizon);
      if (!synth) continue;

      Circuit replacement(cur.num_qubits());
      for (const Gate &g : synth->circuit.gates())
        replacement.add_cnot(w.qubits[g.q0], w.qubits[g.q1]);
      if (params.safety_verify)
        SSR_ASSERT(linear_equivalent(local, synth->circuit, local.num_qubits()),
                   "rewrite changed the window semantics");

      ReplaceResult spliced =
          replace_window_mapped(cur, w.gate_ids, replacement, w.anchor);
      if (depth(spliced.circuit) > depth(cur)) continue;
      cur = std::move(spliced.circuit);
      for (SubcircuitWindow &other : selected) {
        if (&other == &w) continue;
        for (int &id : other.gate_ids)
          id = id >= 0 ? spliced.id_map[id] : -1;
      }
    }

    if (depth(cur) >= depth_before) {
      ++iter;
      break;
    }
  }

  if (params.safety_verify && c0.num_qubits() <= 10)
    SSR_ASSERT(equivalent(c0, cur, 1e-9),
               "optimized circuit is not equivalent to the input");
  SSR_ASSERT(hardware_compliant(cur, ag), "optimizer broke compliance");

  report.sat_calls = sat.calls;
  report.final_depth = depth(cur);
  report.final_gate_count = static_cast<int>(decompose_swaps(cur).size());
  report.depth_improvement_fraction =
      report.original_depth == 0
          ? 0.0
          : static_cast<double>(report.original_depth - report.final_depth) /
                report.original_depth;
  report.gate_improvement_fraction =
      report.original_gate_count == 0
          ? 0.0
          : static_cast<double>(report.original_gate_count -
                                report.final_gate_count) /
                report.original_gate_count;
  report.outer_iterations = iter;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return {std::move(cur), report};
}

Circuit naive_route(const Circuit &logical, const ArchitectureGraph &ag,
                    uint64_t seed) {
  if (logical.num_qubits() > ag.num_qubits())
    throw InvalidArgument("more logical qubits than physical qubits");
  Rng rng(seed);
  int n = ag.num_qubits();
  std::vector<int> phys_of(n), log_at(n);  // identity initial mapping
  for (int i = 0; i < n; ++i) phys_of[i] = log_at[i] = i;

  Circuit out(n);
  auto shortest_path = [&](int src, int dst) {
    std::vector<int> dist(n, -1);
    std::vector<int> order{src};
    dist[src] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
      int q = order[head];
      for (int r : ag.neighbors(q))
        if (dist[r] < 0) {
          dist[r] = dist[q] + 1;
          order.push_back(r);
        }
    }
    if (dist[dst] < 0)
      throw InvalidArgument("architecture graph is disconnected");
    std::vector<int> path{dst};
    int cur = dst;
    while (cur != src) {
      std::vector<int> preds;
      for (int r : ag.neighbors(cur))
        if (dist[r] == dist[cur] - 1) preds.push_back(r);
      cur = preds[rng.uniform_index(preds.size())];
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (const Gate &g : logical.gates()) {
    if (!is_two_qubit(g.kind)) {
      out.add(g.kind, phys_of[g.q0], -1, g.label);
      continue;
    }
    int a = phys_of[g.q0], b = phys_of[g.q1];
    if (!ag.has_edge(a, b)) {
      std::vector<int> path = shortest_path(a, b);
      for (size_t i = 0; i + 2 < path.size(); ++i) {
        int u = path[i], v = path[i + 1];
        out.add_swap(u, v);
        std::swap(log_at[u], log_at[v]);
        if (log_at[u] >= 0) phys_of[log_at[u]] = u;
        if (log_at[v] >= 0) phys_of[log_at[v]] = v;
      }
      a = phys_of[g.q0];
      b = phys_of[g.q1];
    }
    out.add(g.kind, a, b);
  }
  return out;
}

BenchmarkSummary run_benchmark(const std::string &directory,
                               const ArchitectureGraph &ag,
                               const SsrParams &params) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto &entry : fs::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".qasm")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  BenchmarkSummary summary;
  summary.entries.resize(files.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(files.size()); ++i) {
    BenchmarkEntry &entry = summary.entries[i];
    entry.file = fs::path(files[i]).filename().string();
    try {
      std::ifstream in(files[i]);
      std::stringstream buf;
      buf << in.rdbuf();
      Circuit c = parse_qasm(buf.str());
      auto [optimized, report] = ssr_optimize(c, ag, params);
      (void)optimized;
      entry.report = report;
      entry.ok = true;
    } catch (const Error &e) {
      entry.error = e.what();
    }
  }

  double log_depth_ratio = 0.0, log_gate_ratio = 0.0;
  int counted = 0;
  for (const auto &entry : summary.entries) {
    if (!entry.ok) continue;
    summary.total_sat_calls += entry.report.sat_calls;
    if (entry.report.original_depth > 0 && entry.report.final_depth > 0) {
      log_depth_ratio += std::log(
          static_cast<double>(entry.report.final_depth) /
          entry.report.original_depth);
      log_gate_ratio += std::log(
          static_cast<double>(entry.report.final_gate_count) /
          entry.report.original_gate_count);
      ++counted;
    }
  }
  if (counted > 0) {
    summary.geomean_depth_ratio = std::exp(log_depth_ratio / counted);
    summary.geomean_gate_ratio = std::exp(log_gate_ratio / counted);
    summary.geomean_depth_improvement = 1.0 - summary.geomean_depth_ratio;
    summary.geomean_gate_improvement = 1.0 - summary.geomean_gate_ratio;
  }
  return summary;
}

std::string benchmark_to_json(const BenchmarkSummary &summary,
                              bool include_runtime) {
  nlohmann::json doc;
  doc["circuits"] = nlohmann::json::array();
  for (const auto &entry : summary.entries) {
    nlohmann::json e;
    e["file"] = entry.file;
    e["ok"] = entry.ok;
    if (entry.ok)
      e["report"] = report_json_object(entry.report, include_runtime);
    else
      e["error"] = entry.error;
    doc["circuits"].push_back(e);
  }
  doc["geomean_depth_ratio"] = summary.geomean_depth_ratio;
  doc["geomean_depth_improvement"] = summary.geomean_depth_improvement;
  doc["geomean_gate_ratio"] = summary.geomean_gate_ratio;
  doc["geomean_gate_improvement"] = summary.geomean_gate_improvement;
  doc["total_sat_calls"] = summary.total_sat_calls;
  return doc.dump(2) + "\n";
}

std::string benchmark_to_text(const BenchmarkSummary &summary) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "circuit" << std::right << std::setw(8)
      << "d(ori)" << std::setw(8) << "d(opt)" << std::setw(10) << "d imp."
      << std::setw(10) << "g imp." << std::setw(10) << "SAT" << std::setw(10)
      << "RT(s)" << "\n";
  for (const auto &entry : summary.entries) {
    if (!entry.ok) {
      out << std::left << std::setw(28) << entry.file << "  error: "
          << entry.error << "\n";
      continue;
    }
    const auto &r = entry.report;
    out << std::left << std::setw(28) << entry.file << std::right
        << std::setw(8) << r.original_depth << std::setw(8) << r.final_depth
        << std::setw(9) << std::fixed << std::setprecision(1)
        << 100.0 * r.depth_improvement_fraction << "%" << std::setw(9)
        << 100.0 * r.gate_improvement_fraction << "%" << std::setw(10)
        << r.sat_calls << std::setw(10) << std::setprecision(2)
        << r.runtime_seconds << "\n";
  }
  out << "geometric mean depth improvement: " << std::setprecision(2)
      << 100.0 * summary.geomean_depth_improvement << "%\n";
  out << "geometric mean gate improvement:  " << std::setprecision(2)
      << 100.0 * summary.geomean_gate_improvement << "%\n";
  return out.str();
}

}  // namespace ssr
