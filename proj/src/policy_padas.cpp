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
#include "hetsched/policy_padas.hpp"

#include <algorithm>

namespace hetsched {

PadasQueue::PadasQueue(const EstimateTable& estimates, const std::vector<SlotRef>& slots)
    : estimates_(estimates) {
  for (const SlotRef& s : slots) {
    if (s.cls == DeviceClass::GPU) has_gpu_ = true;
    if (s.cls == DeviceClass::MIC) has_mic_ = true;
  }
}

// Speedup estimate used for ordering; an accelerator class absent from the
// worker contributes no preference.
double PadasQueue::accel_speedup(OperationKind op, DeviceClass cls) const {
  if (cls == DeviceClass::GPU && !has_gpu_) return 0.0;
  if (cls == DeviceClass::MIC && !has_mic_) return 0.0;
  return estimates_.speedup(op, cls);
}

void PadasQueue::insert(const FineTask& task) {
  Entry e{task.id, accel_speedup(task.op, DeviceClass::GPU),
          accel_speedup(task.op, DeviceClass::MIC)};
  if (e.mic_speedup > e.gpu_speedup) {
    // MIC segment: walk from the head past strictly larger MIC speedups.
    // Within an equal-speedup block the oldest entry then sits nearest the
    // tail, so the core end consumes equals oldest first.
    auto it = seq_.begin();
    std::size_t pos = 0;
    while (pos < mic_count_ && it->mic_speedup > e.mic_speedup) {
      ++it;
      ++pos;
    }
    seq_.insert(it, e);
    ++mic_count_;
  } else {
    // GPU segment: walk from the tail past strictly larger GPU speedups, so
    // an equal-speedup run keeps its oldest entry nearest the head and both
    // ends consume equals oldest first.
    auto it = seq_.end();
    std::size_t remaining = seq_.size() - mic_count_;
    while (remaining > 0) {
      auto prev = std::prev(it);
      if (prev->gpu_speedup > e.gpu_speedup) {
        it = prev;
        --remaining;
      } else {
        break;
      }
    }
    seq_.insert(it, e);
  }
}

std::optional<TaskId> PadasQueue::take(const SlotRef& slot, double now) {
  (void)now;
  if (seq_.empty()) return std::nullopt;
  switch (slot.cls) {
    case DeviceClass::MIC: {
      if (mic_count_ > 0) {
        // Highest MIC speedup, oldest among equals: an equal-key run sits
        // newest first, so advance to the back of the head run.
        auto it = seq_.begin();
        std::size_t idx = 0;
        while (idx + 1 < mic_count_) {
          auto nxt = std::next(it);
          if (nxt->mic_speedup != it->mic_speedup) break;
          it = nxt;
          ++idx;
        }
        const TaskId id = it->id;
        seq_.erase(it);
        --mic_count_;
        return id;
      }
      // MIC segment empty: the GPU segment's least GPU-profitable element.
      const TaskId id = seq_.front().id;
      seq_.pop_front();
      return id;
    }
    case DeviceClass::GPU: {
      if (mic_count_ < seq_.size()) {
        // Highest GPU speedup, oldest among equals: the tail run holds its
        // oldest entry first, so walk back to the front of the run.
        auto it = std::prev(seq_.end());
        std::size_t idx = seq_.size() - 1;
        while (idx > mic_count_) {
          auto prv = std::prev(it);
          if (prv->gpu_speedup != it->gpu_speedup) break;
          it = prv;
          --idx;
        }
        const TaskId id = it->id;
        seq_.erase(it);
        return id;
      }
      // GPU segment empty: the MIC segment's least MIC-profitable element.
      const TaskId id = seq_.back().id;
      seq_.pop_back();
      --mic_count_;
      return id;
    }
    case DeviceClass::CPUCore:
      return take_boundary();
  }
  return std::nullopt;
}

std::optional<TaskId> PadasQueue::take_boundary() {
  const bool have_mic_seg = mic_count_ > 0;
  const bool have_gpu_seg = mic_count_ < seq_.size();
  auto boundary_it = std::next(seq_.begin(), static_cast<long>(mic_count_));

  std::list<Entry>::iterator victim;
  if (have_mic_seg && have_gpu_seg) {
    // Compare the two boundary elements: the MIC segment's tail and the GPU
    // segment's head.  Take the one whose best accelerator speedup is
    // smaller; it loses the least by running on a core.
    auto mic_tail = std::prev(boundary_it);
    auto gpu_head = boundary_it;
    const double mic_best = std::max(mic_tail->gpu_speedup, mic_tail->mic_speedup);
    const double gpu_best = std::max(gpu_head->gpu_speedup, gpu_head->mic_speedup);
    victim = (mic_best <= gpu_best) ? mic_tail : gpu_head;
  } else if (have_mic_seg) {
    victim = std::prev(boundary_it);
  } else {
    victim = boundary_it;
  }
  const bool from_mic_segment = have_mic_seg && victim != boundary_it;
  const TaskId id = victim->id;
  seq_.erase(victim);
  if (from_mic_segment) --mic_count_;
  return id;
}

}  // namespace hetsched
