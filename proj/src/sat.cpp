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

#include "ssr/sat.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace ssr {

std::string to_dimacs(const CnfFormula &formula) {
  std::ostringstream out;
  out << "p cnf " << formula.var_count << " " << formula.clauses.size()
      << "\n";
  for (const auto &clause : formula.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

CnfFormula parse_dimacs(const std::string &text) {
  std::istringstream in(text);
  std::string tok;
  CnfFormula f;
  bool header = false;
  std::vector<int> clause;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      size_t nclauses;
      if (!(in >> fmt >> f.var_count >> nclauses) || fmt != "cnf")
        throw ParseError("malformed DIMACS header");
      header = true;
      continue;
    }
    int lit;
    try {
      lit = std::stoi(tok);
    } catch (const std::exception &) {
      throw ParseError("unexpected token '" + tok + "' in DIMACS input");
    }
    if (lit == 0) {
      f.add_clause(clause);
      clause.clear();
    } else {
      if (std::abs(lit) > f.var_count) f.var_count = std::abs(lit);
      clause.push_back(lit);
    }
  }
  if (!clause.empty()) f.add_clause(clause);
  if (!header) throw ParseError("missing DIMACS header");
  return f;
}

namespace {

// Internal literal encoding: variable v (0-based) -> 2v | sign.
using Lit = uint32_t;
constexpr uint32_t kNoClause = UINT32_MAX;

inline Lit make_lit(int var0, bool negative) {
  return (static_cast<uint32_t>(var0) << 1) | (negative ? 1u : 0u);
}
inline uint32_t var_of(Lit l) { return l >> 1; }
inline Lit negate(Lit l) { return l ^ 1u; }

class Cdcl {
 public:
  explicit Cdcl(const CnfFormula &formula) : nvars_(formula.var_count) {
    value_.assign(nvars_, 0);
    level_.assign(nvars_, 0);
    reason_.assign(nvars_, kNoClause);
    activity_.assign(nvars_, 0.0);
    phase_.assign(nvars_, false);
    watches_.assign(2 * static_cast<size_t>(nvars_), {});
    seen_.assign(nvars_, false);
    for (const auto &clause : formula.clauses) {
      if (conflict_at_root_) break;
      add_clause(clause);
    }
  }

  SatResult run() {
    SatResult result;
    if (conflict_at_root_) return result;
    if (!propagate_all()) return result;
    uint64_t conflicts = 0, restart_limit = luby_limit();
    while (true) {
      uint32_t confl = propagate();
      if (confl != kNoClause) {
        if (decision_level() == 0) return result;
        ++conflicts;
        std::vector<Lit> learned;
        int back_level = 0;
        analyze(confl, learned, back_level);
        backtrack(back_level);
        attach_learned(learned);
        decay_activity();
        if (conflicts >= restart_limit) {
          conflicts = 0;
          ++restart_count_;
          restart_limit = luby_limit();
          backtrack(0);
        }
      } else {
        int next = pick_branch_var();
        if (next < 0) {
          result.sat = true;
          result.model.assign(static_cast<size_t>(nvars_) + 1, false);
          for (int v = 0; v < nvars_; ++v) result.model[v + 1] = value_[v] > 0;
          return result;
        }
        trail_lim_.push_back(trail_.size());
        enqueue(make_lit(next, !phase_[next]), kNoClause);
      }
    }
  }

 private:
  struct Clause {
    std::vector<Lit> lits;
  };

  void add_clause(const std::vector<int> &dimacs_lits) {
    std::vector<Lit> lits;
    for (int l : dimacs_lits) {
      int v = std::abs(l) - 1;
      if (v < 0 || v >= nvars_)
        throw InvalidArgument("literal references unallocated variable");
      lits.push_back(make_lit(v, l < 0));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (size_t i = 0; i + 1 < lits.size(); ++i)
      if (lits[i] == negate(lits[i + 1])) return;  // tautology
    if (lits.empty()) {
      conflict_at_root_ = true;
      return;
    }
    if (lits.size() == 1) {
      units_.push_back(lits[0]);
      return;
    }
    attach(std::move(lits));
  }

  void attach(std::vector<Lit> lits) {
    uint32_t idx = static_cast<uint32_t>(clauses_.size());
    watches_[lits[0]].push_back(idx);
    watches_[lits[1]].push_back(idx);
    clauses_.push_back({std::move(lits)});
  }

  bool propagate_all() {
    for (Lit u : units_) {
      int8_t val = lit_value(u);
      if (val < 0) return false;
      if (val == 0) enqueue(u, kNoClause);
    }
    return propagate() == kNoClause;
  }

  int8_t lit_value(Lit l) const {
    int8_t v = value_[var_of(l)];
    return (l & 1) ? static_cast<int8_t>(-v) : v;
  }

  void enqueue(Lit l, uint32_t reason) {
    uint32_t v = var_of(l);
    value_[v] = (l & 1) ? -1 : 1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  uint32_t propagate() {
    while (qhead_ < trail_.size()) {
      Lit p = trail_[qhead_++];
      Lit falsified = negate(p);
      auto &watch_list = watches_[falsified];
      size_t keep = 0;
      for (size_t i = 0; i < watch_list.size(); ++i) {
        uint32_t ci = watch_list[i];
        auto &lits = clauses_[ci].lits;
        if (lits[0] == falsified) std::swap(lits[0], lits[1]);
        if (lit_value(lits[0]) > 0) {
          watch_list[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < lits.size(); ++k) {
          if (lit_value(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches_[lits[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watch_list[keep++] = ci;
        if (lit_value(lits[0]) < 0) {
          // conflict: restore untouched tail of the watch list
          for (size_t k = i + 1; k < watch_list.size(); ++k)
            watch_list[keep++] = watch_list[k];
          watch_list.resize(keep);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(lits[0], ci);
      }
      watch_list.resize(keep);
    }
    return kNoClause;
  }

  void analyze(uint32_t confl, std::vector<Lit> &learned, int &back_level) {
    learned.push_back(0);  // placeholder for the asserting literal
    int counter = 0;
    Lit p = UINT32_MAX;
    size_t index = trail_.size();
    uint32_t reason = confl;
    do {
      const auto &lits = clauses_[reason].lits;
      for (Lit q : lits) {
        if (p != UINT32_MAX && q == p) continue;
        uint32_t v = var_of(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = true;
          bump_activity(v);
          if (level_[v] >= decision_level())
            ++counter;
          else
            learned.push_back(q);
        }
      }
      // pick next marked literal on the trail
      while (!seen_[var_of(trail_[--index])]) {
      }
      p = trail_[index];
      seen_[var_of(p)] = false;
      reason = reason_[var_of(p)];
      --counter;
    } while (counter > 0);
    learned[0] = negate(p);

    back_level = 0;
    size_t max_pos = 1;
    for (size_t i = 1; i < learned.size(); ++i) {
      int lv = level_[var_of(learned[i])];
      if (lv > back_level) {
        back_level = lv;
        max_pos = i;
      }
    }
    if (learned.size() > 1) std::swap(learned[1], learned[max_pos]);
    for (size_t i = 1; i < learned.size(); ++i)
      seen_[var_of(learned[i])] = false;
  }

  void backtrack(int target_level) {
    if (decision_level() <= target_level) return;
    size_t lim = trail_lim_[target_level];
    for (size_t i = trail_.size(); i-- > lim;) {
      uint32_t v = var_of(trail_[i]);
      phase_[v] = value_[v] > 0;
      value_[v] = 0;
      reason_[v] = kNoClause;
    }
    trail_.resize(lim);
    trail_lim_.resize(target_level);
    qhead_ = lim;
  }

  void attach_learned(std::vector<Lit> &learned) {
    if (learned.size() == 1) {
      enqueue(learned[0], kNoClause);
      return;
    }
    uint32_t idx = static_cast<uint32_t>(clauses_.size());
    watches_[learned[0]].push_back(idx);
    watches_[learned[1]].push_back(idx);
    clauses_.push_back({learned});
    enqueue(learned[0], idx);
  }

  int pick_branch_var() {
    int best = -1;
    double best_act = -1.0;
    for (int v = 0; v < nvars_; ++v)
      if (value_[v] == 0 && activity_[v] > best_act) {
        best = v;
        best_act = activity_[v];
      }
    return best;
  }

  void bump_activity(uint32_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (double &a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
  }

  void decay_activity() { var_inc_ /= 0.95; }

  uint64_t luby_limit() const {
    // Luby sequence scaled by 128 conflicts.
    uint64_t x = restart_count_;
    uint64_t size = 1, seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) / 2;
      --seq;
      x %= size;
    }
    return (1ull << seq) * 128;
  }

  int nvars_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<uint32_t>> watches_;
  std::vector<Lit> units_;
  std::vector<Lit> trail_;
  std::vector<size_t> trail_lim_;
  size_t qhead_ = 0;
  std::vector<int8_t> value_;
  std::vector<int> level_;
  std::vector<uint32_t> reason_;
  std::vector<double> activity_;
  std::vector<bool> phase_;
  std::vector<bool> seen_;
  double var_inc_ = 1.0;
  uint64_t restart_count_ = 0;
  bool conflict_at_root_ = false;
};

}  // namespace

SatResult CdclSolver::solve(const CnfFormula &formula) {
  return Cdcl(formula).run();
}

SatResult SubprocessSolver::solve(const CnfFormula &formula) {
  char path[] = "/tmp/ssr_cnf_XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) throw Error("could not create temporary CNF file");
  {
    std::string dimacs = to_dimacs(formula);
    FILE *f = fdopen(fd, "w");
    fwrite(dimacs.data(), 1, dimacs.size(), f);
    fclose(f);
  }
  std::string cmd = exe_path_ + " " + path + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::remove(path);
    throw Error("could not run SAT solver '" + exe_path_ + "'");
  }
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  pclose(pipe);
  std::remove(path);

  SatResult result;
  bool answered = false;
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s SATISFIABLE", 0) == 0) {
      result.sat = true;
      answered = true;
    } else if (line.rfind("s UNSATISFIABLE", 0) == 0) {
      answered = true;
    } else if (!line.empty() && line[0] == 'v') {
      if (result.model.empty())
        result.model.assign(static_cast<size_t>(formula.var_count) + 1, false);
      std::istringstream vs(line.substr(1));
      int lit;
      while (vs >> lit)
        if (lit != 0 && std::abs(lit) <= formula.var_count)
          result.model[std::abs(lit)] = lit > 0;
    }
  }
  if (!answered)
    throw Error("solver '" + exe_path_ + "' produced no s-line answer");
  if (result.sat && result.model.empty())
    throw Error("solver '" + exe_path_ + "' reported SAT without a model");
  return result;
}

}  // namespace ssr
