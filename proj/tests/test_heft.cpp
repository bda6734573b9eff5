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
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "hetsched/common.hpp"
#include "hetsched/policy_heft.hpp"

using namespace hetsched;

namespace {

FineTask make_task(TaskId id, OperationKind op, std::vector<TaskId> preds = {}) {
  FineTask f;
  f.id = id;
  f.op = op;
  f.parent_stage = 0;
  f.predecessors = std::move(preds);
  f.base_cost_ms = 1.0;
  return f;
}

void set_times(EstimateTable& t, OperationKind op, double cpu, double gpu) {
  t.set_time_ms(op, DeviceClass::CPUCore, cpu);
  t.set_time_ms(op, DeviceClass::GPU, gpu);
  t.set_time_ms(op, DeviceClass::MIC, cpu);
}

std::vector<const FineTask*> ptrs(const std::vector<FineTask>& tasks) {
  std::vector<const FineTask*> out;
  for (const FineTask& t : tasks) out.push_back(&t);
  return out;
}

const PlannedTask* find_planned(const HeftPlan& plan, TaskId id) {
  for (const auto& lane : plan.lanes) {
    for (const PlannedTask& p : lane) {
      if (p.id == id) return &p;
    }
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("heft") {

TEST_CASE("plans a join by rank order and earliest finish") {
  EstimateTable est;
  set_times(est, OperationKind::RGB2Gray, 10.0, 5.0);    // A
  set_times(est, OperationKind::MorphOpen, 8.0, 8.0);    // B
  set_times(est, OperationKind::MorphRecon, 20.0, 4.0);  // C
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};

  std::vector<FineTask> tasks;
  tasks.push_back(make_task(0, OperationKind::RGB2Gray));
  tasks.push_back(make_task(1, OperationKind::MorphOpen));
  tasks.push_back(make_task(2, OperationKind::MorphRecon, {0, 1}));

  const HeftPlan plan = heft_plan(ptrs(tasks), slots, est);
  CHECK(plan.rank.at(0) == doctest::Approx(19.5));
  CHECK(plan.rank.at(1) == doctest::Approx(20.0));
  CHECK(plan.rank.at(2) == doctest::Approx(12.0));

  REQUIRE(plan.lanes.size() == 2);
  // Highest rank first: B takes the CPU on an even finish-time tie, A and C
  // ride the GPU.
  REQUIRE(plan.lanes[0].size() == 1);
  CHECK(plan.lanes[0][0].id == 1);
  CHECK(plan.lanes[0][0].start_ms == doctest::Approx(0.0));
  CHECK(plan.lanes[0][0].finish_ms == doctest::Approx(8.0));
  REQUIRE(plan.lanes[1].size() == 2);
  CHECK(plan.lanes[1][0].id == 0);
  CHECK(plan.lanes[1][0].finish_ms == doctest::Approx(5.0));
  CHECK(plan.lanes[1][1].id == 2);
  CHECK(plan.lanes[1][1].start_ms == doctest::Approx(8.0));  // waits for B
  CHECK(plan.lanes[1][1].finish_ms == doctest::Approx(12.0));
  CHECK(plan.makespan_ms == doctest::Approx(12.0));
}

TEST_CASE("fills gaps left before high-rank tasks") {
  EstimateTable est;
  set_times(est, OperationKind::RGB2Gray, 10.0, 10.0);    // D
  set_times(est, OperationKind::MorphRecon, 20.0, 20.0);  // E
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}};

  std::vector<FineTask> tasks;
  tasks.push_back(make_task(0, OperationKind::RGB2Gray));
  tasks.push_back(make_task(1, OperationKind::MorphRecon, {99}));

  HeftContext ctx;
  ctx.running_finish_ms.emplace(99, 10.0);
  const HeftPlan plan = heft_plan(ptrs(tasks), slots, est, ctx);

  REQUIRE(plan.lanes.size() == 1);
  REQUIRE(plan.lanes[0].size() == 2);
  // E is ranked first and starts at its predecessor's finish; D slots into
  // the idle gap in front of it.
  CHECK(plan.lanes[0][0].id == 0);
  CHECK(plan.lanes[0][0].start_ms == doctest::Approx(0.0));
  CHECK(plan.lanes[0][0].finish_ms == doctest::Approx(10.0));
  CHECK(plan.lanes[0][1].id == 1);
  CHECK(plan.lanes[0][1].start_ms == doctest::Approx(10.0));
  CHECK(plan.makespan_ms == doctest::Approx(30.0));
}

TEST_CASE("slot availability shifts placement") {
  EstimateTable est;
  set_times(est, OperationKind::RGB2Gray, 10.0, 10.0);
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};

  std::vector<FineTask> tasks;
  tasks.push_back(make_task(0, OperationKind::RGB2Gray));

  HeftContext ctx;
  ctx.slot_available_ms = {5.0, 0.0};
  const HeftPlan plan = heft_plan(ptrs(tasks), slots, est, ctx);
  const PlannedTask* p = find_planned(plan, 0);
  REQUIRE(p != nullptr);
  CHECK(p->slot == 1);
  CHECK(p->start_ms == doctest::Approx(0.0));
  CHECK(p->finish_ms == doctest::Approx(10.0));
}

TEST_CASE("rank ties break toward smaller ids, finish ties toward smaller slots") {
  EstimateTable est;
  set_times(est, OperationKind::RGB2Gray, 10.0, 10.0);
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};

  std::vector<FineTask> tasks;
  tasks.push_back(make_task(5, OperationKind::RGB2Gray));
  tasks.push_back(make_task(3, OperationKind::RGB2Gray));

  const HeftPlan plan = heft_plan(ptrs(tasks), slots, est);
  REQUIRE(plan.lanes[0].size() == 1);
  REQUIRE(plan.lanes[1].size() == 1);
  CHECK(plan.lanes[0][0].id == 3);
  CHECK(plan.lanes[1][0].id == 5);
  CHECK(plan.makespan_ms == doctest::Approx(10.0));
}

TEST_CASE("plan respects in-window precedence on every lane") {
  // Random windows: planned start of a task never precedes the planned
  // finish of any in-window predecessor.
  std::mt19937_64 gen(99);
  const auto ops = all_operations();
  EstimateTable est = EstimateTable::from_profile(OperationProfile::defaults(), 1000.0);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::CPUCore}};
    if (gen() & 1) slots.push_back({2, DeviceClass::GPU});
    if (gen() & 1) slots.push_back({static_cast<int>(slots.size()), DeviceClass::MIC});

    const int n = 2 + static_cast<int>(gen() % 12);
    std::vector<FineTask> tasks;
    for (TaskId id = 0; id < n; ++id) {
      std::vector<TaskId> preds;
      for (TaskId p = 0; p < id; ++p) {
        if (gen() % 4 == 0) preds.push_back(p);
      }
      tasks.push_back(make_task(id, ops[gen() % ops.size()], std::move(preds)));
    }

    const HeftPlan plan = heft_plan(ptrs(tasks), slots, est);
    std::size_t planned = 0;
    for (const auto& lane : plan.lanes) planned += lane.size();
    REQUIRE(planned == tasks.size());

    for (const FineTask& t : tasks) {
      const PlannedTask* self = find_planned(plan, t.id);
      REQUIRE(self != nullptr);
      for (TaskId p : t.predecessors) {
        const PlannedTask* pre = find_planned(plan, p);
        REQUIRE(pre != nullptr);
        CHECK(self->start_ms >= pre->finish_ms - 1e-9);
      }
    }
    // Lanes never overlap their own placements.
    for (const auto& lane : plan.lanes) {
      for (std::size_t i = 0; i + 1 < lane.size(); ++i) {
        CHECK(lane[i].finish_ms <= lane[i + 1].start_ms + 1e-9);
      }
    }
  }
}

TEST_CASE("planner error paths") {
  EstimateTable est;
  set_times(est, OperationKind::RGB2Gray, 10.0, 10.0);
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}};

  std::vector<FineTask> cyc;
  cyc.push_back(make_task(0, OperationKind::RGB2Gray, {1}));
  cyc.push_back(make_task(1, OperationKind::RGB2Gray, {0}));
  CHECK_THROWS_AS((void)heft_plan(ptrs(cyc), slots, est), ConfigError);

  std::vector<FineTask> one;
  one.push_back(make_task(0, OperationKind::RGB2Gray));
  HeftContext bad;
  bad.slot_available_ms = {0.0, 0.0};
  CHECK_THROWS_AS((void)heft_plan(ptrs(one), slots, est, bad), ConfigError);
  CHECK_THROWS_AS((void)heft_plan(ptrs(one), {}, est), ConfigError);

  const HeftPlan empty = heft_plan({}, slots, est);
  CHECK(empty.makespan_ms == doctest::Approx(0.0));
  REQUIRE(empty.lanes.size() == 1);
  CHECK(empty.lanes[0].empty());
}

TEST_CASE("policy serves lanes and idles slots that are off-plan") {
  EstimateTable est;
  set_times(est, OperationKind::RGB2Gray, 10.0, 5.0);    // A
  set_times(est, OperationKind::MorphRecon, 20.0, 4.0);  // B
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};
  const SlotRef cpu = slots[0];
  const SlotRef gpu = slots[1];

  std::vector<FineTask> tasks;
  tasks.reserve(2);
  tasks.push_back(make_task(0, OperationKind::RGB2Gray));
  tasks.push_back(make_task(1, OperationKind::MorphRecon, {0}));

  HeftPolicy policy(est, slots);
  CHECK(policy.ready_empty());
  policy.add_window(tasks[0]);
  policy.add_window(tasks[1]);
  policy.insert(tasks[0]);
  CHECK_FALSE(policy.ready_empty());

  // Both tasks plan onto the GPU lane, so the core idles although a ready
  // task exists.
  CHECK_FALSE(policy.take(cpu, 0.0).has_value());
  const auto got = policy.take(gpu, 0.0);
  REQUIRE(got.has_value());
  CHECK(*got == 0);
  policy.on_start(tasks[0], gpu, 0.0);

  // The successor is planned but not ready until its predecessor finishes.
  CHECK_FALSE(policy.take(gpu, 0.0).has_value());
  CHECK_FALSE(policy.take(cpu, 0.0).has_value());

  policy.on_finish(tasks[0], 5.0);
  policy.insert(tasks[1]);
  CHECK_FALSE(policy.take(cpu, 5.0).has_value());
  const auto next = policy.take(gpu, 5.0);
  REQUIRE(next.has_value());
  CHECK(*next == 1);
  policy.on_start(tasks[1], gpu, 5.0);
  policy.on_finish(tasks[1], 9.0);
  CHECK(policy.ready_empty());
  CHECK_FALSE(policy.take(gpu, 9.0).has_value());
}

TEST_CASE("policy replans when the window grows") {
  EstimateTable est;
  set_times(est, OperationKind::RGB2Gray, 10.0, 5.0);
  set_times(est, OperationKind::DistTransform, 40.0, 2.0);
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};

  std::vector<FineTask> tasks;
  tasks.reserve(3);
  tasks.push_back(make_task(0, OperationKind::RGB2Gray));
  tasks.push_back(make_task(1, OperationKind::RGB2Gray));
  tasks.push_back(make_task(2, OperationKind::DistTransform));

  HeftPolicy policy(est, slots);
  policy.add_window(tasks[0]);
  policy.add_window(tasks[1]);
  policy.insert(tasks[0]);
  policy.insert(tasks[1]);

  // First plan: ranks tie, task 0 rides the GPU, task 1 the core.
  const auto first = policy.take(slots[1], 0.0);
  REQUIRE(first.has_value());
  CHECK(*first == 0);
  policy.on_start(tasks[0], slots[1], 0.0);

  // A long GPU-friendly task arrives; the refreshed plan reroutes.
  policy.add_window(tasks[2]);
  policy.insert(tasks[2]);
  const auto cpu_next = policy.take(slots[0], 0.0);
  REQUIRE(cpu_next.has_value());
  CHECK(*cpu_next == 1);
  policy.on_start(tasks[1], slots[0], 0.0);

  policy.on_finish(tasks[0], 5.0);
  const auto gpu_next = policy.take(slots[1], 5.0);
  REQUIRE(gpu_next.has_value());
  CHECK(*gpu_next == 2);
}

}
