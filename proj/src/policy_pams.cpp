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
#include "hetsched/policy_pams.hpp"

#include <algorithm>

namespace hetsched {

PamsQueues::PamsQueues(const EstimateTable& estimates, const std::vector<SlotRef>& slots)
    : estimates_(estimates) {
  for (const SlotRef& s : slots) has_class_[static_cast<int>(s.cls)] = true;
}

PamsQueues::~PamsQueues() = default;

void PamsQueues::insert(const FineTask& task) {
  auto node = std::make_unique<Node>();
  node->id = task.id;

  const bool gpu = has_class_[static_cast<int>(DeviceClass::GPU)];
  const bool mic = has_class_[static_cast<int>(DeviceClass::MIC)];
  const double gpu_speedup = gpu ? estimates_.speedup(task.op, DeviceClass::GPU) : 0.0;
  const double mic_speedup = mic ? estimates_.speedup(task.op, DeviceClass::MIC) : 0.0;

  node->key[static_cast<int>(DeviceClass::GPU)] = gpu_speedup;
  node->key[static_cast<int>(DeviceClass::MIC)] = mic_speedup;
  node->key[static_cast<int>(DeviceClass::CPUCore)] = std::max(gpu_speedup, mic_speedup);

  for (int c = 0; c < kDeviceClassCount; ++c) {
    if (!has_class_[c]) continue;
    List& q = queues_[c];
    auto it = q.begin();
    if (c == static_cast<int>(DeviceClass::CPUCore)) {
      // Ascending: cores take the least offloadable task first.
      while (it != q.end() && (*it)->key[c] <= node->key[c]) ++it;
    } else {
      // Descending: the accelerator takes its most profitable task first.
      while (it != q.end() && (*it)->key[c] >= node->key[c]) ++it;
    }
    node->where[c] = q.insert(it, node.get());
  }
  nodes_.emplace(task.id, std::move(node));
  ++size_;
}

std::optional<TaskId> PamsQueues::take(const SlotRef& slot, double now) {
  (void)now;
  const int c = static_cast<int>(slot.cls);
  if (!has_class_[c] || queues_[c].empty()) return std::nullopt;
  Node* node = queues_[c].front();
  const TaskId id = node->id;
  remove_everywhere(node);
  return id;
}

void PamsQueues::remove_everywhere(Node* node) {
  for (int c = 0; c < kDeviceClassCount; ++c) {
    if (has_class_[c]) queues_[c].erase(node->where[c]);
  }
  nodes_.erase(node->id);
  --size_;
}

std::vector<TaskId> PamsQueues::queue_ids(DeviceClass cls) const {
  std::vector<TaskId> out;
  for (const Node* n : queues_[static_cast<int>(cls)]) out.push_back(n->id);
  return out;
}

double PamsQueues::sort_key(DeviceClass cls, TaskId id) const {
  return nodes_.at(id)->key[static_cast<int>(cls)];
}

}  // namespace hetsched
