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

#include <list>
#include <memory>
#include <unordered_map>

#include "hetsched/policy.hpp"

namespace hetsched {

// One sorted queue per device class, cross-linked so that taking a task
// from one queue removes it from the others in constant time.  Accelerator
// queues are sorted by descending own speedup; the CPU queue is sorted by
// ascending best-accelerator speedup, so cores drain the tasks that benefit
// least from offloading.  Ties keep insertion order.  Queues exist only for
// device classes the worker actually has.
class PamsQueues final : public ReadyPolicy {
public:
  PamsQueues(const EstimateTable& estimates, const std::vector<SlotRef>& slots);
  ~PamsQueues() override;

  void insert(const FineTask& task) override;
  std::optional<TaskId> take(const SlotRef& slot, double now) override;
  bool ready_empty() const override { return size_ == 0; }

  std::size_t size() const { return size_; }
  // Inspection for invariant checks: queue contents in take order.
  std::vector<TaskId> queue_ids(DeviceClass cls) const;
  double sort_key(DeviceClass cls, TaskId id) const;

private:
  struct Node;
  using List = std::list<Node*>;

  struct Node {
    TaskId id;
    double key[kDeviceClassCount];  // sort key per class queue
    List::iterator where[kDeviceClassCount];
  };

  void remove_everywhere(Node* node);

  const EstimateTable& estimates_;
  bool has_class_[kDeviceClassCount] = {false, false, false};
  List queues_[kDeviceClassCount];
  std::unordered_map<TaskId, std::unique_ptr<Node>> nodes_;
  std::size_t size_ = 0;
};

}  // namespace hetsched
