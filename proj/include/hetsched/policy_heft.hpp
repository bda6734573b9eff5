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
#pragma once

#include <unordered_map>
#include <unordered_set>

#include "hetsched/policy.hpp"

namespace hetsched {

struct PlannedTask {
  TaskId id = -1;
  int slot = 0;
  double start_ms = 0.0;
  double finish_ms = 0.0;
};

struct HeftPlan {
  // One lane per slot, ordered by planned start time.
  std::vector<std::vector<PlannedTask>> lanes;
  std::unordered_map<TaskId, double> rank;
  double makespan_ms = 0.0;
};

// External state the planner folds in: when each slot frees up and when
// still-running predecessors of window tasks are expected to finish.
// Predecessors that are neither in the window nor listed as running are
// treated as already completed.
struct HeftContext {
  double now_ms = 0.0;
  std::vector<double> slot_available_ms;  // indexed by slot; empty = all at now
  std::unordered_map<TaskId, double> running_finish_ms;
};

// List scheduling over the window: tasks are ranked by upward rank computed
// from slot-averaged execution times (communication is not modelled), then
// placed in rank order on the slot giving the earliest finish time,
// considering gaps left between already-placed tasks.  Rank ties break
// toward the smaller task id; finish-time ties toward the smaller slot
// index.  The window must be closed under in-window precedence.
HeftPlan heft_plan(const std::vector<const FineTask*>& window,
                   const std::vector<SlotRef>& slots, const EstimateTable& estimates,
                   const HeftContext& context = {});

// Windowed planning policy.  The plan covers every announced-but-unstarted
// task and is rebuilt when the window has gained tasks or the asking slot's
// lane ran dry.  A slot receives the next task of its own lane, and only
// when that task is ready; otherwise the slot idles until the plan catches
// up with execution.
class HeftPolicy final : public ReadyPolicy {
public:
  HeftPolicy(const EstimateTable& estimates, const std::vector<SlotRef>& slots);

  void add_window(const FineTask& task) override;
  void insert(const FineTask& task) override;
  void on_start(const FineTask& task, const SlotRef& slot, double now) override;
  void on_finish(const FineTask& task, double now) override;
  std::optional<TaskId> take(const SlotRef& slot, double now) override;
  bool ready_empty() const override { return ready_.empty(); }

  const HeftPlan& current_plan() const { return plan_; }

private:
  void replan(double now);

  const EstimateTable& estimates_;
  std::vector<SlotRef> slots_;

  std::vector<const FineTask*> window_;            // unstarted announced tasks
  std::unordered_map<TaskId, std::size_t> window_pos_;
  std::unordered_set<TaskId> ready_;
  std::unordered_map<TaskId, double> running_finish_;  // estimated, by task
  std::vector<double> slot_busy_until_;                // estimated, by slot

  HeftPlan plan_;
  std::vector<std::size_t> lane_cursor_;
  bool dirty_ = true;
};

}  // namespace hetsched
