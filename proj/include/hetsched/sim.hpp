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

#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "hetsched/device.hpp"
#include "hetsched/estimates.hpp"
#include "hetsched/policy.hpp"
#include "hetsched/workload.hpp"

namespace hetsched {

enum class TraceEventKind : int {
  TaskStart = 0,
  TaskFinish = 1,
  StageComplete = 2,
  WindowRefill = 3,
};

std::string_view to_string(TraceEventKind kind);

// One trace row.  Task rows (TaskStart, TaskFinish) carry op and cls; stage
// rows (StageComplete, WindowRefill) carry stage.  Rows appear in
// processing order, which is deterministic for fixed inputs.
struct TraceEvent {
  double time_ms = 0.0;
  TraceEventKind kind = TraceEventKind::TaskStart;
  std::int64_t id = -1;  // fine task id or stage id
  OperationKind op = OperationKind::RGB2Gray;
  StageKind stage = StageKind::Segmentation;
  DeviceClass cls = DeviceClass::CPUCore;
  int worker = 0;

  bool is_task_row() const {
    return kind == TraceEventKind::TaskStart || kind == TraceEventKind::TaskFinish;
  }
};

using PolicyFactory =
    std::function<std::unique_ptr<ReadyPolicy>(const EstimateTable&, const std::vector<SlotRef>&)>;

struct SimOptions {
  PolicyKind policy = PolicyKind::PAMS;
  // Stages a worker may hold in its dispatch window at once.
  int window_size = 30;
  // Delay between a stage being assigned to a worker and its tasks becoming
  // visible to the worker's scheduler.
  double io_latency_ms = 0.0;
  // Test hook: overrides `policy` when set.  Simulations run with an
  // injected policy skip the work-conservation self-check.
  PolicyFactory policy_factory;
};

struct SimReport {
  double makespan_ms = 0.0;
  double busy_ms[kDeviceClassCount] = {0.0, 0.0, 0.0};
  // busy / (makespan * slots of the class); 0 when the class has no slots.
  double utilization[kDeviceClassCount] = {0.0, 0.0, 0.0};
  long long assignments[kOperationCount][kDeviceClassCount] = {};
  long long tasks_completed = 0;
  long long stages_completed = 0;

  long long class_total(DeviceClass cls) const;
};

struct SimResult {
  SimReport report;
  std::vector<TraceEvent> trace;
};

// Replays the workload on the cluster under the policy.  `truth` gives the
// real device speedups that determine execution times; `sched_estimates`
// is what the scheduler believes (possibly perturbed).  Each node is one
// worker with its own policy instance; a manager deals pending stages to
// workers round-robin whenever a window has room.  A tile's feature stage
// enters the pending queue only when its segmentation stage completes.
// Throws SimDeadlock if the simulation stops with stages unfinished.
SimResult run_simulation(const Workload& workload, const ClusterConfig& cluster,
                         const OperationProfile& truth, const EstimateTable& sched_estimates,
                         const SimOptions& options = {});

// Rebuilds the aggregate report from a trace.  run_simulation uses this
// internally, so a stored trace reproduces its report exactly.
SimReport collect_report(const std::vector<TraceEvent>& trace, const ClusterConfig& cluster);

// CSV with header time,event,task_id,op,device_class,worker_id; times are
// printed with six decimals so equal traces serialize byte-identically.
void write_trace_csv(const std::vector<TraceEvent>& trace, std::ostream& out);

}  // namespace hetsched
