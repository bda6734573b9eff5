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

#include "hetsched/policy.hpp"

namespace hetsched {

// Single sorted sequence with one end per accelerator.  Tasks expecting a
// larger MIC speedup form the head segment, sorted by descending MIC
// speedup from the head; the remaining tasks form the tail segment, sorted
// by descending GPU speedup from the tail.  The MIC consumes the head, the
// GPU consumes the tail, and CPU cores consume at the segment boundary,
// picking whichever boundary element profits less from its accelerator.
// Ties keep insertion order, and an accelerator whose segment is empty
// still consumes from its own end.
class PadasQueue final : public ReadyPolicy {
public:
  struct Entry {
    TaskId id;
    double gpu_speedup;
    double mic_speedup;
  };

  PadasQueue(const EstimateTable& estimates, const std::vector<SlotRef>& slots);

  void insert(const FineTask& task) override;
  std::optional<TaskId> take(const SlotRef& slot, double now) override;
  bool ready_empty() const override { return seq_.empty(); }

  // Inspection for invariant checks: entries in head-to-tail order and the
  // index of the first GPU-segment element.
  std::vector<Entry> snapshot() const { return {seq_.begin(), seq_.end()}; }
  std::size_t boundary() const { return mic_count_; }
  std::size_t size() const { return seq_.size(); }

private:
  double accel_speedup(OperationKind op, DeviceClass cls) const;
  std::optional<TaskId> take_boundary();

  const EstimateTable& estimates_;
  bool has_gpu_ = false;
  bool has_mic_ = false;
  std::list<Entry> seq_;
  std::size_t mic_count_ = 0;  // length of the head (MIC) segment
};

}  // namespace hetsched
