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
#include <cmath>

#include "hetsched/common.hpp"
#include "hetsched/workload.hpp"

using namespace hetsched;

TEST_SUITE("workload") {

TEST_CASE("two stage tasks per tile with the feature stage dependent") {
  const Workload w = generate_workload(5, OperationProfile::defaults(), 7);
  REQUIRE(w.stages.size() == 10);
  REQUIRE(w.fine_of_stage.size() == 10);
  CHECK(w.tile_count == 5);
  for (int tile = 0; tile < 5; ++tile) {
    const StageTask& seg = w.stages[static_cast<std::size_t>(2 * tile)];
    const StageTask& feat = w.stages[static_cast<std::size_t>(2 * tile + 1)];
    CHECK(seg.id == 2 * tile);
    CHECK(seg.tile_id == tile);
    CHECK(seg.stage == StageKind::Segmentation);
    CHECK_FALSE(seg.depends_on.has_value());
    CHECK(feat.stage == StageKind::FeatureComputation);
    REQUIRE(feat.depends_on.has_value());
    CHECK(*feat.depends_on == seg.id);
  }
}

TEST_CASE("fine tasks mirror the stage templates") {
  const Workload w = generate_workload(3, OperationProfile::defaults(), 11);
  REQUIRE(w.fine.size() == 3 * 11);
  const PipelineTemplates tmpl = PipelineTemplates::defaults();
  for (const StageTask& stage : w.stages) {
    const auto& ids = w.fine_of_stage[static_cast<std::size_t>(stage.id)];
    const PipelineTemplate& t = tmpl.of(stage.stage);
    REQUIRE(static_cast<int>(ids.size()) == t.node_count());
    for (int i = 0; i < t.node_count(); ++i) {
      const FineTask& f = w.fine[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])];
      CHECK(f.op == t.nodes[static_cast<std::size_t>(i)]);
      CHECK(f.parent_stage == stage.id);
      CHECK(f.base_cost_ms > 0.0);
    }
  }
  // Segmentation fine tasks form a chain; each node's predecessor is the
  // previous node of the same stage.
  const auto& seg_ids = w.fine_of_stage[0];
  REQUIRE(seg_ids.size() == 7);
  CHECK(w.fine[static_cast<std::size_t>(seg_ids[0])].predecessors.empty());
  for (std::size_t i = 1; i < seg_ids.size(); ++i) {
    const FineTask& f = w.fine[static_cast<std::size_t>(seg_ids[i])];
    REQUIRE(f.predecessors.size() == 1);
    CHECK(f.predecessors[0] == seg_ids[i - 1]);
  }
  // Feature fine tasks all hang off the stage's first node.
  const auto& feat_ids = w.fine_of_stage[1];
  REQUIRE(feat_ids.size() == 4);
  CHECK(w.fine[static_cast<std::size_t>(feat_ids[0])].predecessors.empty());
  for (std::size_t i = 1; i < feat_ids.size(); ++i) {
    const FineTask& f = w.fine[static_cast<std::size_t>(feat_ids[i])];
    REQUIRE(f.predecessors.size() == 1);
    CHECK(f.predecessors[0] == feat_ids[0]);
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const OperationProfile p = OperationProfile::defaults();
  const Workload a = generate_workload(8, p, 123);
  const Workload b = generate_workload(8, p, 123);
  REQUIRE(a.fine.size() == b.fine.size());
  for (std::size_t i = 0; i < a.fine.size(); ++i) {
    CHECK(a.fine[i].base_cost_ms == b.fine[i].base_cost_ms);
    CHECK(a.fine[i].op == b.fine[i].op);
  }
  const Workload c = generate_workload(8, p, 124);
  bool any_differs = false;
  for (std::size_t i = 0; i < a.fine.size(); ++i) {
    if (a.fine[i].base_cost_ms != c.fine[i].base_cost_ms) any_differs = true;
  }
  CHECK(any_differs);
}

TEST_CASE("zero jitter reproduces the profile cost split exactly") {
  const OperationProfile p = OperationProfile::defaults();
  WorkloadOptions opt;
  opt.tile_base_ms = 2000.0;
  opt.jitter_frac = 0.0;
  const Workload w = generate_workload(2, p, 99, opt);
  double tile_total = 0.0;
  for (const TaskId id : w.fine_of_stage[0]) {
    tile_total += w.fine[static_cast<std::size_t>(id)].base_cost_ms;
  }
  for (const TaskId id : w.fine_of_stage[1]) {
    tile_total += w.fine[static_cast<std::size_t>(id)].base_cost_ms;
  }
  CHECK(tile_total == doctest::Approx(2000.0));
  for (const FineTask& f : w.fine) {
    CHECK(f.base_cost_ms == doctest::Approx(2000.0 * p.app_share(f.op)));
  }
}

TEST_CASE("jitter stays inside its band and is centred") {
  const OperationProfile p = OperationProfile::defaults();
  const Workload w = generate_workload(200, p, 5);
  double sum_ratio = 0.0;
  double lo = 10.0;
  double hi = 0.0;
  for (const FineTask& f : w.fine) {
    const double ratio = f.base_cost_ms / (1000.0 * p.app_share(f.op));
    sum_ratio += ratio;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  const double mean = sum_ratio / static_cast<double>(w.fine.size());
  CHECK(lo >= 0.9);
  CHECK(hi <= 1.1);
  CHECK(std::fabs(mean - 1.0) < 0.01);
  // The band is actually exercised.
  CHECK(lo < 0.95);
  CHECK(hi > 1.05);
}

TEST_CASE("device time estimates divide by the speedup") {
  const OperationProfile p = OperationProfile::defaults();
  FineTask f;
  f.id = 0;
  f.op = OperationKind::DistTransform;
  f.parent_stage = 0;
  f.base_cost_ms = 400.0;
  CHECK(estimate_time(f, DeviceClass::CPUCore, p) == doctest::Approx(400.0));
  CHECK(estimate_time(f, DeviceClass::GPU, p) == doctest::Approx(400.0 / 32.0));
  CHECK(estimate_time(f, DeviceClass::MIC, p) == doctest::Approx(400.0 / 16.0));
  CHECK(speedup_of(f, DeviceClass::GPU, p) == doctest::Approx(32.0));
}

TEST_CASE("expand_stage checks the cost list length") {
  const PipelineTemplate t = build_pipeline_template(StageKind::FeatureComputation);
  StageTask stage;
  stage.id = 0;
  stage.tile_id = 0;
  stage.stage = StageKind::FeatureComputation;
  CHECK_THROWS_AS((void)expand_stage(stage, t, 0, {1.0, 2.0}), ConfigError);
  const auto fine = expand_stage(stage, t, 10, {1.0, 2.0, 3.0, 4.0});
  REQUIRE(fine.size() == 4);
  CHECK(fine[0].id == 10);
  CHECK(fine[3].id == 13);
  CHECK(fine[3].base_cost_ms == doctest::Approx(4.0));
  CHECK(fine[1].predecessors == std::vector<TaskId>{10});
}

TEST_CASE("workload validation catches dangling references") {
  Workload w = generate_workload(2, OperationProfile::defaults(), 1);
  CHECK_NOTHROW(w.validate());

  Workload bad_pred = w;
  bad_pred.fine[5].predecessors.push_back(9999);
  CHECK_THROWS_AS(bad_pred.validate(), ConfigError);

  Workload bad_cost = w;
  bad_cost.fine[3].base_cost_ms = 0.0;
  CHECK_THROWS_AS(bad_cost.validate(), ConfigError);

  Workload bad_stage = w;
  bad_stage.fine[0].parent_stage = 42;
  CHECK_THROWS_AS(bad_stage.validate(), ConfigError);

  Workload bad_ids = w;
  bad_ids.fine[2].id = 7;
  CHECK_THROWS_AS(bad_ids.validate(), ConfigError);

  CHECK_THROWS_AS((void)generate_workload(0, OperationProfile::defaults(), 1), ConfigError);
}

}
