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

#include <deque>

#include "hetsched/policy.hpp"

namespace hetsched {

// Single FIFO: any idle device receives the oldest ready task.
class FcfsQueue final : public ReadyPolicy {
public:
  void insert(const FineTask& task) override { queue_.push_back(task.id); }

  std::optional<TaskId> take(const SlotRef& slot, double now) override {
    (void)slot; (void)now;
    if (queue_.empty()) return std::nullopt;
    const TaskId id = queue_.front();
    queue_.pop_front();
    return id;
  }

  bool ready_empty() const override { return queue_.empty(); }

  std::size_t size() const { return queue_.size(); }

private:
  std::deque<TaskId> queue_;
};

}  // namespace hetsched
