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

#include <algorithm>
#include <random>
#include <vector>

#include "hetsched/common.hpp"
#include "hetsched/oracle.hpp"

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

void set_times(EstimateTable& t, OperationKind op, double cpu, double gpu, double mic) {
  t.set_time_ms(op, DeviceClass::CPUCore, cpu);
  t.set_time_ms(op, DeviceClass::GPU, gpu);
  t.set_time_ms(op, DeviceClass::MIC, mic);
}

EstimateTable uniform_times(double v) {
  EstimateTable t;
  for (OperationKind op : all_operations()) set_times(t, op, v, v, v);
  return t;
}

// Replays the oracle's schedule and confirms it is feasible and achieves
// the reported makespan.
void check_schedule(const std::vector<FineTask>& tasks, const std::vector<SlotRef>& slots,
                    const EstimateTable& times, const OracleResult& result) {
  REQUIRE(result.slot_of_task.size() == tasks.size());
  REQUIRE(result.start_ms.size() == tasks.size());
  std::vector<double> finish(tasks.size(), 0.0);
  double makespan = 0.0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const int s = result.slot_of_task[i];
    REQUIRE(s >= 0);
    REQUIRE(s < static_cast<int>(slots.size()));
    const double dur = times.time_ms(tasks[i].op, slots[static_cast<std::size_t>(s)].cls);
    finish[i] = result.start_ms[i] + dur;
    makespan = std::max(makespan, finish[i]);
  }
  for (const FineTask& t : tasks) {
    for (TaskId p : t.predecessors) {
      CHECK(result.start_ms[static_cast<std::size_t>(t.id)] >=
            finish[static_cast<std::size_t>(p)] - 1e-9);
    }
  }
  for (std::size_t s = 0; s < slots.size(); ++s) {
    std::vector<std::size_t> mine;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (result.slot_of_task[i] == static_cast<int>(s)) mine.push_back(i);
    }
    std::sort(mine.begin(), mine.end(),
              [&](std::size_t a, std::size_t b) { return result.start_ms[a] < result.start_ms[b]; });
    for (std::size_t k = 0; k + 1 < mine.size(); ++k) {
      CHECK(finish[mine[k]] <= result.start_ms[mine[k + 1]] + 1e-9);
    }
  }
  CHECK(result.makespan_ms == doctest::Approx(makespan));
}

std::vector<SlotRef> cpu_slots(int n) {
  std::vector<SlotRef> out;
  for (int i = 0; i < n; ++i) out.push_back({i, DeviceClass::CPUCore});
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("independent equal tasks pack perfectly onto two slots") {
  const EstimateTable times = uniform_times(10.0);
  std::vector<FineTask> tasks = {make_task(0, OperationKind::RGB2Gray),
                                 make_task(1, OperationKind::MorphOpen)};
  const OracleResult r = brute_force_optimal(tasks, cpu_slots(2), times);
  CHECK(r.makespan_ms == doctest::Approx(10.0));
  CHECK(r.nodes_explored > 0);
  check_schedule(tasks, cpu_slots(2), times, r);
}

TEST_CASE("a chain cannot be parallelised") {
  const EstimateTable times = uniform_times(10.0);
  std::vector<FineTask> tasks = {make_task(0, OperationKind::RGB2Gray),
                                 make_task(1, OperationKind::MorphOpen, {0}),
                                 make_task(2, OperationKind::MorphRecon, {1})};
  const OracleResult r = brute_force_optimal(tasks, cpu_slots(2), times);
  CHECK(r.makespan_ms == doctest::Approx(30.0));
  check_schedule(tasks, cpu_slots(2), times, r);

  const LowerBounds lb = lower_bounds(tasks, cpu_slots(2), times);
  CHECK(lb.critical_path_ms == doctest::Approx(30.0));
  CHECK(lb.area_ms == doctest::Approx(15.0));
  CHECK(lb.combined() == doctest::Approx(30.0));
}

TEST_CASE("device affinities route tasks to their fast device") {
  EstimateTable times = uniform_times(1.0);
  set_times(times, OperationKind::RGB2Gray, 10.0, 2.0, 10.0);  // X: GPU-friendly
  set_times(times, OperationKind::MorphOpen, 4.0, 8.0, 4.0);   // Y: CPU-friendly
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};
  std::vector<FineTask> tasks = {make_task(0, OperationKind::RGB2Gray),
                                 make_task(1, OperationKind::MorphOpen)};
  const OracleResult r = brute_force_optimal(tasks, slots, times);
  CHECK(r.makespan_ms == doctest::Approx(4.0));
  CHECK(r.slot_of_task[0] == 1);
  CHECK(r.slot_of_task[1] == 0);
  check_schedule(tasks, slots, times, r);
}

TEST_CASE("packing beats the longest-first heuristic") {
  // {6,5,4,3} on two slots: optimum 9 pairs 6+3 and 5+4; longest-first
  // incumbent packs 6+4 for 10.
  EstimateTable times = uniform_times(1.0);
  set_times(times, OperationKind::RGB2Gray, 6.0, 6.0, 6.0);
  set_times(times, OperationKind::MorphOpen, 5.0, 5.0, 5.0);
  set_times(times, OperationKind::MorphRecon, 4.0, 4.0, 4.0);
  set_times(times, OperationKind::AreaThreshold, 3.0, 3.0, 3.0);
  std::vector<FineTask> tasks = {make_task(0, OperationKind::RGB2Gray),
                                 make_task(1, OperationKind::MorphOpen),
                                 make_task(2, OperationKind::MorphRecon),
                                 make_task(3, OperationKind::AreaThreshold)};
  const OracleResult r = brute_force_optimal(tasks, cpu_slots(2), times);
  CHECK(r.makespan_ms == doctest::Approx(9.0));
  check_schedule(tasks, cpu_slots(2), times, r);
}

TEST_CASE("a join waits for its slower branch") {
  EstimateTable times = uniform_times(1.0);
  set_times(times, OperationKind::RGB2Gray, 2.0, 2.0, 2.0);
  set_times(times, OperationKind::MorphOpen, 3.0, 3.0, 3.0);
  set_times(times, OperationKind::MorphRecon, 4.0, 4.0, 4.0);
  std::vector<FineTask> tasks = {make_task(0, OperationKind::RGB2Gray),
                                 make_task(1, OperationKind::MorphOpen),
                                 make_task(2, OperationKind::MorphRecon, {0, 1})};
  const OracleResult r = brute_force_optimal(tasks, cpu_slots(2), times);
  CHECK(r.makespan_ms == doctest::Approx(7.0));
  check_schedule(tasks, cpu_slots(2), times, r);
}

TEST_CASE("single slot serialises everything") {
  const EstimateTable times = uniform_times(5.0);
  std::vector<FineTask> tasks;
  for (TaskId id = 0; id < 4; ++id) tasks.push_back(make_task(id, all_operations()[id]));
  const OracleResult r = brute_force_optimal(tasks, cpu_slots(1), times);
  CHECK(r.makespan_ms == doctest::Approx(20.0));
  check_schedule(tasks, cpu_slots(1), times, r);
}

TEST_CASE("pruned and exhaustive searches agree on random instances") {
  std::mt19937_64 gen(314);
  const auto ops = all_operations();
  const std::vector<std::vector<SlotRef>> slot_choices = {
      cpu_slots(1),
      cpu_slots(2),
      {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}},
      {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}, {2, DeviceClass::MIC}},
  };
  for (int iter = 0; iter < 60; ++iter) {
    EstimateTable times;
    for (OperationKind op : ops) {
      set_times(times, op, 1.0 + static_cast<double>(gen() % 190) / 10.0,
                1.0 + static_cast<double>(gen() % 190) / 10.0,
                1.0 + static_cast<double>(gen() % 190) / 10.0);
    }
    const int n = 1 + static_cast<int>(gen() % (iter < 50 ? 5 : 6));
    std::vector<FineTask> tasks;
    for (TaskId id = 0; id < n; ++id) {
      std::vector<TaskId> preds;
      for (TaskId p = 0; p < id; ++p) {
        if (gen() % 4 == 0) preds.push_back(p);
      }
      tasks.push_back(make_task(id, ops[gen() % ops.size()], std::move(preds)));
    }
    const auto& slots = slot_choices[gen() % slot_choices.size()];

    const OracleResult pruned = brute_force_optimal(tasks, slots, times);
    const OracleResult plain = exhaustive_optimal(tasks, slots, times);
    CHECK(pruned.makespan_ms == doctest::Approx(plain.makespan_ms));
    check_schedule(tasks, slots, times, pruned);
    check_schedule(tasks, slots, times, plain);

    const LowerBounds lb = lower_bounds(tasks, slots, times);
    CHECK(pruned.makespan_ms >= lb.combined() - 1e-9);
  }
}

TEST_CASE("the search is deterministic") {
  EstimateTable times = uniform_times(3.0);
  std::vector<FineTask> tasks = {make_task(0, OperationKind::RGB2Gray),
                                 make_task(1, OperationKind::MorphOpen),
                                 make_task(2, OperationKind::MorphRecon, {0})};
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};
  const OracleResult a = brute_force_optimal(tasks, slots, times);
  const OracleResult b = brute_force_optimal(tasks, slots, times);
  CHECK(a.makespan_ms == b.makespan_ms);
  CHECK(a.slot_of_task == b.slot_of_task);
  CHECK(a.start_ms == b.start_ms);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("instance validation") {
  const EstimateTable times = uniform_times(1.0);

  std::vector<FineTask> many;
  for (TaskId id = 0; id < 4; ++id) many.push_back(make_task(id, OperationKind::RGB2Gray));
  CHECK_THROWS_AS((void)brute_force_optimal(many, cpu_slots(2), times, 3), ConfigError);
  CHECK_THROWS_AS((void)exhaustive_optimal(many, cpu_slots(2), times, 3), ConfigError);

  std::vector<FineTask> one = {make_task(0, OperationKind::RGB2Gray)};
  CHECK_THROWS_AS((void)brute_force_optimal(one, cpu_slots(4), times), ConfigError);
  CHECK_THROWS_AS((void)brute_force_optimal(one, {}, times), ConfigError);

  std::vector<FineTask> sparse = {make_task(2, OperationKind::RGB2Gray)};
  CHECK_THROWS_AS((void)brute_force_optimal(sparse, cpu_slots(1), times), ConfigError);

  std::vector<FineTask> dangling = {make_task(0, OperationKind::RGB2Gray, {5})};
  CHECK_THROWS_AS((void)brute_force_optimal(dangling, cpu_slots(1), times), ConfigError);

  std::vector<FineTask> cyc = {make_task(0, OperationKind::RGB2Gray, {1}),
                               make_task(1, OperationKind::MorphOpen, {0})};
  CHECK_THROWS_AS((void)brute_force_optimal(cyc, cpu_slots(1), times), ConfigError);

  const OracleResult empty = brute_force_optimal({}, cpu_slots(2), times);
  CHECK(empty.makespan_ms == doctest::Approx(0.0));
  CHECK(empty.slot_of_task.empty());
}

TEST_CASE("lower bounds on a heterogeneous join") {
  EstimateTable times = uniform_times(1.0);
  // Fastest-device times: 2, 3, 4.
  set_times(times, OperationKind::RGB2Gray, 8.0, 2.0, 9.0);
  set_times(times, OperationKind::MorphOpen, 3.0, 5.0, 7.0);
  set_times(times, OperationKind::MorphRecon, 4.0, 6.0, 8.0);
  const std::vector<SlotRef> slots = {{0, DeviceClass::CPUCore}, {1, DeviceClass::GPU}};
  std::vector<FineTask> tasks = {make_task(0, OperationKind::RGB2Gray),
                                 make_task(1, OperationKind::MorphOpen),
                                 make_task(2, OperationKind::MorphRecon, {0, 1})};
  const LowerBounds lb = lower_bounds(tasks, slots, times);
  CHECK(lb.critical_path_ms == doctest::Approx(7.0));  // max(2,3) chain into 4
  CHECK(lb.area_ms == doctest::Approx(4.5));           // (2+3+4)/2
  CHECK(lb.combined() == doctest::Approx(7.0));
}

}
