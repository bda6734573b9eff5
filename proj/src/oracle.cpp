/* Copyright 2026 hetsched contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "hetsched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hetsched/common.hpp"

namespace hetsched {
namespace {

constexpr long long kNodeBudget = 200'000'000;

struct Instance {
  const std::vector<FineTask>& tasks;
  std::vector<SlotRef> slots;
  std::size_t n;
  std::size_t nslots;
  std::vector<std::vector<double>> dur;   // [task][slot]
  std::vector<double> fastest;            // min over slots
  std::vector<std::vector<int>> succ;
  std::vector<double> tail;               // fastest[i] + longest fastest chain below

  Instance(const std::vector<FineTask>& tasks_, const std::vector<SlotRef>& slots_,
           const EstimateTable& times)
      : tasks(tasks_), slots(slots_), n(tasks_.size()), nslots(slots_.size()) {
    if (nslots == 0) throw ConfigError("oracle needs at least one slot");
    for (std::size_t i = 0; i < n; ++i) {
      if (tasks[i].id != static_cast<TaskId>(i)) {
        throw ConfigError("oracle task ids must be dense 0..n-1");
      }
      for (TaskId p : tasks[i].predecessors) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || p == tasks[i].id) {
          throw ConfigError("oracle task has an out-of-range predecessor");
        }
      }
    }
    dur.assign(n, std::vector<double>(nslots, 0.0));
    fastest.assign(n, 0.0);
    succ.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t s = 0; s < nslots; ++s) {
        dur[i][s] = times.time_ms(tasks[i].op, slots[s].cls);
        best = std::min(best, dur[i][s]);
      }
      fastest[i] = best;
      for (TaskId p : tasks[i].predecessors) succ[p].push_back(static_cast<int>(i));
    }
    // Longest fastest-time chain from each task, via DFS with memo; the
    // graph was not validated acyclic here, so guard with a visit state.
    tail.assign(n, -1.0);
    std::vector<int> visiting(n, 0);
    for (std::size_t i = 0; i < n; ++i) chain(i, visiting);
  }

  double chain(std::size_t i, std::vector<int>& visiting) {
    if (tail[i] >= 0.0) return tail[i];
    if (visiting[i]) throw ConfigError("oracle task graph contains a cycle");
    visiting[i] = 1;
    double best = 0.0;
    for (int s : succ[i]) best = std::max(best, chain(static_cast<std::size_t>(s), visiting));
    visiting[i] = 0;
    tail[i] = fastest[i] + best;
    return tail[i];
  }
};

struct Search {
  const Instance& inst;
  bool prune;
  long long nodes = 0;

  std::vector<double> finish;
  std::vector<int> placed_slot;
  std::vector<double> placed_start;
  std::vector<int> preds_left;
  std::vector<double> slot_free;

  double best_makespan = std::numeric_limits<double>::infinity();
  std::vector<int> best_slot;
  std::vector<double> best_start;

  explicit Search(const Instance& inst_, bool prune_) : inst(inst_), prune(prune_) {
    finish.assign(inst.n, 0.0);
    placed_slot.assign(inst.n, -1);
    placed_start.assign(inst.n, 0.0);
    preds_left.assign(inst.n, 0);
    slot_free.assign(inst.nslots, 0.0);
    for (std::size_t i = 0; i < inst.n; ++i) {
      preds_left[i] = static_cast<int>(inst.tasks[i].predecessors.size());
    }
  }

  // Greedy longest-tail-first list schedule; seeds the incumbent so
  // pruning bites early.
  void seed_incumbent() {
    std::vector<int> left = preds_left;
    std::vector<double> fin(inst.n, 0.0), freeat(inst.nslots, 0.0), start(inst.n, 0.0);
    std::vector<int> slot(inst.n, -1);
    double makespan = 0.0;
    for (std::size_t placed = 0; placed < inst.n; ++placed) {
      int pick = -1;
      for (std::size_t i = 0; i < inst.n; ++i) {
        if (slot[i] < 0 && left[i] == 0 &&
            (pick < 0 || inst.tail[i] > inst.tail[static_cast<std::size_t>(pick)])) {
          pick = static_cast<int>(i);
        }
      }
      const auto u = static_cast<std::size_t>(pick);
      double ready = 0.0;
      for (TaskId p : inst.tasks[u].predecessors) ready = std::max(ready, fin[p]);
      double best_fin = std::numeric_limits<double>::infinity();
      std::size_t best_s = 0;
      for (std::size_t s = 0; s < inst.nslots; ++s) {
        const double f = std::max(ready, freeat[s]) + inst.dur[u][s];
        if (f < best_fin) { best_fin = f; best_s = s; }
      }
      start[u] = std::max(ready, freeat[best_s]);
      fin[u] = best_fin;
      freeat[best_s] = best_fin;
      slot[u] = static_cast<int>(best_s);
      makespan = std::max(makespan, best_fin);
      for (int v : inst.succ[u]) --left[static_cast<std::size_t>(v)];
    }
    best_makespan = makespan;
    best_slot = slot;
    best_start = start;
  }

  double lower_bound(std::size_t placed_count, double makespan_so_far) const {
    double lb = makespan_so_far;
    double work_left = 0.0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (placed_slot[i] >= 0) continue;
      work_left += inst.fastest[i];
      double ready = 0.0;
      for (TaskId p : inst.tasks[i].predecessors) {
        if (placed_slot[p] >= 0) ready = std::max(ready, finish[p]);
      }
      lb = std::max(lb, ready + inst.tail[i]);
    }
    if (placed_count < inst.n) {
      // Water-filling area bound: smallest T with
      // sum_s max(0, T - slot_free[s]) >= remaining fastest work.
      std::vector<double> frees = slot_free;
      std::sort(frees.begin(), frees.end());
      double covered = 0.0;
      double t = frees[0];
      std::size_t k = 1;
      while (k < frees.size() && covered + static_cast<double>(k) * (frees[k] - t) < work_left) {
        covered += static_cast<double>(k) * (frees[k] - t);
        t = frees[k];
        ++k;
      }
      t += (work_left - covered) / static_cast<double>(k);
      lb = std::max(lb, t);
    }
    return lb;
  }

  void dfs(std::size_t placed_count, double makespan_so_far) {
    if (++nodes > kNodeBudget) throw ConfigError("oracle search exceeded its node budget");
    if (placed_count == inst.n) {
      if (makespan_so_far < best_makespan) {
        best_makespan = makespan_so_far;
        best_slot = placed_slot;
        best_start = placed_start;
      }
      return;
    }
    if (prune && lower_bound(placed_count, makespan_so_far) >= best_makespan) return;

    for (std::size_t i = 0; i < inst.n; ++i) {
      if (placed_slot[i] >= 0 || preds_left[i] != 0) continue;
      if (prune) {
        // Interchangeable ready twins: branch only on the smallest id.
        bool dominated = false;
        for (std::size_t j = 0; j < i && !dominated; ++j) {
          dominated = placed_slot[j] < 0 && preds_left[j] == 0 &&
                      inst.tasks[j].op == inst.tasks[i].op &&
                      inst.tasks[j].predecessors == inst.tasks[i].predecessors &&
                      inst.succ[j] == inst.succ[i];
        }
        if (dominated) continue;
      }
      double ready = 0.0;
      for (TaskId p : inst.tasks[i].predecessors) ready = std::max(ready, finish[p]);
      for (std::size_t s = 0; s < inst.nslots; ++s) {
        if (prune) {
          // Equal-class slots with equal availability are interchangeable.
          bool dup = false;
          for (std::size_t r = 0; r < s && !dup; ++r) {
            dup = inst.slots[r].cls == inst.slots[s].cls && slot_free[r] == slot_free[s];
          }
          if (dup) continue;
        }
        const double start = std::max(ready, slot_free[s]);
        const double fin = start + inst.dur[i][s];
        const double saved_free = slot_free[s];
        placed_slot[i] = static_cast<int>(s);
        placed_start[i] = start;
        finish[i] = fin;
        slot_free[s] = fin;
        for (int v : inst.succ[i]) --preds_left[static_cast<std::size_t>(v)];

        dfs(placed_count + 1, std::max(makespan_so_far, fin));

        for (int v : inst.succ[i]) ++preds_left[static_cast<std::size_t>(v)];
        slot_free[s] = saved_free;
        placed_slot[i] = -1;
      }
    }
  }
};

OracleResult solve(const std::vector<FineTask>& tasks, const std::vector<SlotRef>& slots,
                   const EstimateTable& times, int max_tasks, bool prune) {
  if (static_cast<int>(tasks.size()) > max_tasks) {
    throw ConfigError("oracle refuses instances above " + std::to_string(max_tasks) + " tasks");
  }
  if (slots.size() > 3) throw ConfigError("oracle refuses more than 3 slots");
  OracleResult result;
  if (tasks.empty()) return result;

  Instance inst(tasks, slots, times);
  Search search(inst, prune);
  if (prune) search.seed_incumbent();
  search.dfs(0, 0.0);
  result.makespan_ms = search.best_makespan;
  result.slot_of_task = std::move(search.best_slot);
  result.start_ms = std::move(search.best_start);
  result.nodes_explored = search.nodes;
  return result;
}

}  // namespace

OracleResult brute_force_optimal(const std::vector<FineTask>& tasks,
                                 const std::vector<SlotRef>& slots, const EstimateTable& times,
                                 int max_tasks) {
  return solve(tasks, slots, times, max_tasks, true);
}

OracleResult exhaustive_optimal(const std::vector<FineTask>& tasks,
                                const std::vector<SlotRef>& slots, const EstimateTable& times,
                                int max_tasks) {
  return solve(tasks, slots, times, max_tasks, false);
}

LowerBounds lower_bounds(const std::vector<FineTask>& tasks, const std::vector<SlotRef>& slots,
                         const EstimateTable& times) {
  LowerBounds bounds;
  if (tasks.empty()) return bounds;
  Instance inst(tasks, slots, times);
  double work = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    bounds.critical_path_ms = std::max(bounds.critical_path_ms, inst.tail[i]);
    work += inst.fastest[i];
  }
  bounds.area_ms = work / static_cast<double>(inst.nslots);
  return bounds;
}

}  // namespace hetsched
