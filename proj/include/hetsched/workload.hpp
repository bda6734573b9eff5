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

#include <cstdint>
#include <optional>
#include <vector>

#include "hetsched/common.hpp"
#include "hetsched/pipeline.hpp"
#include "hetsched/profile.hpp"

namespace hetsched {

// Coarse unit of work the manager hands to workers: one pipeline stage of
// one tile.  A tile's FeatureComputation stage depends on its Segmentation
// stage having completed.
struct StageTask {
  StageId id = -1;
  int tile_id = -1;
  StageKind stage = StageKind::Segmentation;
  std::optional<StageId> depends_on;
};

// One operation instance.  base_cost_ms is the single-CPU-core execution
// time; running on another device divides it by that device's speedup.
// Predecessors are fine tasks of the same stage.
struct FineTask {
  TaskId id = -1;
  OperationKind op = OperationKind::RGB2Gray;
  StageId parent_stage = -1;
  std::vector<TaskId> predecessors;
  double base_cost_ms = 0.0;
};

struct Workload {
  std::vector<StageTask> stages;      // indexed by StageId
  std::vector<FineTask> fine;         // indexed by TaskId
  std::vector<std::vector<TaskId>> fine_of_stage;  // indexed by StageId

  int tile_count = 0;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError on dangling references
};

struct WorkloadOptions {
  // Total single-core time of one tile before jitter, split across the
  // operations by their cost shares.
  double tile_base_ms = 1000.0;
  // Half-width of the uniform multiplicative cost jitter applied to every
  // fine task (0.10 = factors in [0.9, 1.1]).
  double jitter_frac = 0.10;
  PipelineTemplates templates = PipelineTemplates::defaults();
};

// Expands one stage task into fine tasks mirroring the template DAG.  Fine
// task ids are first_fine_id..first_fine_id+n-1 in template node order;
// node_costs_ms supplies base_cost_ms per template node.
std::vector<FineTask> expand_stage(const StageTask& task, const PipelineTemplate& tmpl,
                                   TaskId first_fine_id,
                                   const std::vector<double>& node_costs_ms);

// Two stage tasks per tile plus their expanded operation DAGs.  Identical
// (n_tiles, profile, seed, options) inputs produce identical workloads.
Workload generate_workload(int n_tiles, const OperationProfile& profile, std::uint64_t seed,
                           const WorkloadOptions& options = {});

// Execution time of the task on the device: base_cost_ms / speedup.
double estimate_time(const FineTask& task, DeviceClass cls, const OperationProfile& profile);

double speedup_of(const FineTask& task, DeviceClass cls, const OperationProfile& profile);

}  // namespace hetsched
