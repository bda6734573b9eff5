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

#include <vector>

#include "hetsched/estimates.hpp"
#include "hetsched/policy.hpp"
#include "hetsched/workload.hpp"

namespace hetsched {

struct OracleResult {
  double makespan_ms = 0.0;
  std::vector<int> slot_of_task;  // index into the slots argument
  std::vector<double> start_ms;
  long long nodes_explored = 0;
};

// Minimal-makespan non-preemptive schedule of the task DAG on the given
// slots, found by depth-first search over (ready task, slot) placements
// with branch-and-bound pruning.  Task ids must be dense 0..n-1 and
// predecessors must be in-range.  Refuses instances above max_tasks tasks
// or with more than 3 slots; intended for verifying schedulers on tiny
// instances, not for production scheduling.
OracleResult brute_force_optimal(const std::vector<FineTask>& tasks,
                                 const std::vector<SlotRef>& slots, const EstimateTable& times,
                                 int max_tasks = 10);

// Same optimum via plain exhaustive enumeration with no pruning or
// dominance filtering.  Only for cross-checking brute_force_optimal;
// refuses instances above max_tasks (default 7) tasks.
OracleResult exhaustive_optimal(const std::vector<FineTask>& tasks,
                                const std::vector<SlotRef>& slots, const EstimateTable& times,
                                int max_tasks = 7);

// Bounds no schedule can beat.  critical_path_ms chains each task's
// fastest-device time along the longest dependency path; area_ms spreads
// the summed fastest-device work evenly over all slots.
struct LowerBounds {
  double critical_path_ms = 0.0;
  double area_ms = 0.0;
  double combined() const { return critical_path_ms > area_ms ? critical_path_ms : area_ms; }
};

LowerBounds lower_bounds(const std::vector<FineTask>& tasks, const std::vector<SlotRef>& slots,
                         const EstimateTable& times);

}  // namespace hetsched
