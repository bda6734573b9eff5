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
#include "hetsched/policy_heft.hpp"

#include <algorithm>
#include <cassert>

#include "hetsched/common.hpp"

namespace hetsched {

HeftPlan heft_plan(const std::vector<const FineTask*>& window,
                   const std::vector<SlotRef>& slots, const EstimateTable& estimates,
                   const HeftContext& context) {
  if (slots.empty()) throw ConfigError("planner needs at least one slot");
  HeftPlan plan;
  plan.lanes.resize(slots.size());
  if (window.empty()) return plan;

  const std::size_t n = window.size();
  std::unordered_map<TaskId, std::size_t> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(window[i]->id, i);

  // In-window precedence edges.
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<int> pending(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (TaskId p : window[i]->predecessors) {
      auto it = index.find(p);
      if (it == index.end()) continue;
      succ[it->second].push_back(i);
      ++pending[i];
    }
  }

  std::vector<double> avg_time(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const SlotRef& s : slots) sum += estimates.time_ms(window[i]->op, s.cls);
    avg_time[i] = sum / static_cast<double>(slots.size());
  }

  // Upward rank over the window subgraph, computed in reverse topological
  // order (Kahn over successors, smaller ids first for determinism).
  std::vector<double> rank(n, 0.0);
  {
    std::vector<int> out_pending(n, 0);
    for (std::size_t i = 0; i < n; ++i) out_pending[i] = static_cast<int>(succ[i].size());
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i) {
      if (out_pending[i] == 0) stack.push_back(i);
    }
    // Predecessor lists per node to walk edges backwards.
    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t s : succ[i]) preds[s].push_back(i);
    }
    std::size_t processed = 0;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      ++processed;
      double best = 0.0;
      for (std::size_t s : succ[i]) best = std::max(best, rank[s]);
      rank[i] = avg_time[i] + best;
      for (std::size_t p : preds[i]) {
        if (--out_pending[p] == 0) stack.push_back(p);
      }
    }
    if (processed != n) throw ConfigError("planning window contains a cycle");
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rank[a] != rank[b]) return rank[a] > rank[b];
    return window[a]->id < window[b]->id;
  });

  std::vector<double> base_avail(slots.size(), context.now_ms);
  if (!context.slot_available_ms.empty()) {
    if (context.slot_available_ms.size() != slots.size()) {
      throw ConfigError("slot availability list does not match slot count");
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      base_avail[s] = std::max(context.now_ms, context.slot_available_ms[s]);
    }
  }

  std::vector<double> planned_finish(n, 0.0);
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    double ready = context.now_ms;
    for (TaskId p : window[i]->predecessors) {
      auto it = index.find(p);
      if (it != index.end()) {
        ready = std::max(ready, planned_finish[it->second]);
      } else if (auto run = context.running_finish_ms.find(p);
                 run != context.running_finish_ms.end()) {
        ready = std::max(ready, std::max(run->second, context.now_ms));
      }
      // Otherwise the predecessor already completed and constrains nothing.
    }

    double best_eft = 0.0;
    double best_start = 0.0;
    std::size_t best_slot = slots.size();
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const double dur = estimates.time_ms(window[i]->op, slots[s].cls);
      // Earliest gap in the lane that fits the task after its ready time.
      double prev_end = base_avail[s];
      double start = std::max(ready, prev_end);
      for (const PlannedTask& placed : plan.lanes[s]) {
        const double candidate = std::max(ready, prev_end);
        if (candidate + dur <= placed.start_ms) {
          start = candidate;
          break;
        }
        prev_end = placed.finish_ms;
        start = std::max(ready, prev_end);
      }
      const double eft = start + dur;
      if (best_slot == slots.size() || eft < best_eft) {
        best_eft = eft;
        best_start = start;
        best_slot = s;
      }
    }

    PlannedTask placed{window[i]->id, static_cast<int>(best_slot), best_start, best_eft};
    auto& lane = plan.lanes[best_slot];
    const auto pos = std::upper_bound(
        lane.begin(), lane.end(), placed,
        [](const PlannedTask& a, const PlannedTask& b) { return a.start_ms < b.start_ms; });
    lane.insert(pos, placed);
    planned_finish[i] = best_eft;
    plan.makespan_ms = std::max(plan.makespan_ms, best_eft);
    plan.rank.emplace(window[i]->id, rank[i]);
  }
  return plan;
}

HeftPolicy::HeftPolicy(const EstimateTable& estimates, const std::vector<SlotRef>& slots)
    : estimates_(estimates), slots_(slots), slot_busy_until_(slots.size(), 0.0),
      lane_cursor_(slots.size(), 0) {
  plan_.lanes.resize(slots.size());
}

void HeftPolicy::add_window(const FineTask& task) {
  window_pos_.emplace(task.id, window_.size());
  window_.push_back(&task);
  dirty_ = true;
}

void HeftPolicy::insert(const FineTask& task) { ready_.insert(task.id); }

void HeftPolicy::on_start(const FineTask& task, const SlotRef& slot, double now) {
  auto pos = window_pos_.find(task.id);
  if (pos != window_pos_.end()) {
    // Keep window order stable for deterministic planning input.
    window_.erase(window_.begin() + static_cast<long>(pos->second));
    window_pos_.clear();
    for (std::size_t i = 0; i < window_.size(); ++i) window_pos_.emplace(window_[i]->id, i);
  }
  ready_.erase(task.id);
  const double finish = now + estimates_.time_ms(task.op, slot.cls);
  running_finish_.emplace(task.id, finish);
  slot_busy_until_[static_cast<std::size_t>(slot.slot)] = finish;
}

void HeftPolicy::on_finish(const FineTask& task, double now) {
  running_finish_.erase(task.id);
  (void)now;
}

std::optional<TaskId> HeftPolicy::take(const SlotRef& slot, double now) {
  const auto s = static_cast<std::size_t>(slot.slot);
  if (dirty_) replan(now);
  if (lane_cursor_[s] >= plan_.lanes[s].size()) {
    // Lane ran dry: refresh the plan against current execution state.
    replan(now);
  }
  if (lane_cursor_[s] >= plan_.lanes[s].size()) return std::nullopt;
  const PlannedTask& next = plan_.lanes[s][lane_cursor_[s]];
  if (ready_.find(next.id) == ready_.end()) return std::nullopt;
  ++lane_cursor_[s];
  return next.id;
}

void HeftPolicy::replan(double now) {
  HeftContext ctx;
  ctx.now_ms = now;
  ctx.slot_available_ms.resize(slots_.size());
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    ctx.slot_available_ms[s] = std::max(now, slot_busy_until_[s]);
  }
  ctx.running_finish_ms = running_finish_;
  plan_ = heft_plan(window_, slots_, estimates_, ctx);
  lane_cursor_.assign(slots_.size(), 0);
  dirty_ = false;
}

}  // namespace hetsched
