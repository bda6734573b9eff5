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

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "hetsched/estimates.hpp"
#include "hetsched/workload.hpp"

namespace hetsched {

enum class PolicyKind : int { FCFS = 0, PADAS = 1, PAMS = 2, HEFT = 3 };

std::string_view to_string(PolicyKind kind);
PolicyKind policy_from_string(std::string_view name);
std::vector<PolicyKind> all_policies();

// One task-capable device slot of a worker.
struct SlotRef {
  int slot = 0;  // dense per-worker slot index
  DeviceClass cls = DeviceClass::CPUCore;
};

// Ready-pool contract between a worker and its scheduling policy.  The
// worker announces the fine tasks of each newly arrived stage via
// add_window, marks tasks ready via insert exactly once, and asks for work
// via take whenever a slot idles.  take must hand out each inserted task at
// most once.  The queue policies (FCFS, PADAS, PAMS) are work-conserving:
// take returns a task whenever one is ready.  The planning policy may idle a
// slot to respect its schedule.
class ReadyPolicy {
public:
  virtual ~ReadyPolicy() = default;

  // Stage entered the worker's dispatch window; called before any of the
  // stage's tasks are inserted.
  virtual void add_window(const FineTask& task) { (void)task; }
  // Task's predecessors have all completed.
  virtual void insert(const FineTask& task) = 0;
  virtual void on_start(const FineTask& task, const SlotRef& slot, double now) {
    (void)task; (void)slot; (void)now;
  }
  virtual void on_finish(const FineTask& task, double now) { (void)task; (void)now; }
  virtual std::optional<TaskId> take(const SlotRef& slot, double now) = 0;
  // True when no ready task is waiting (planning internals excluded).
  virtual bool ready_empty() const = 0;
};

// slots lists every task-capable slot of the worker the policy serves;
// estimates must outlive the policy.
std::unique_ptr<ReadyPolicy> make_policy(PolicyKind kind, const EstimateTable& estimates,
                                         const std::vector<SlotRef>& slots);

}  // namespace hetsched
