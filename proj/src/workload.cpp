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
#include "hetsched/workload.hpp"

#include <sstream>

#include "hetsched/common.hpp"

namespace hetsched {

void Workload::validate() const {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageTask& s = stages[i];
    if (s.id != static_cast<StageId>(i)) throw ConfigError("stage ids must be dense");
    if (s.depends_on && (*s.depends_on < 0 || *s.depends_on >= static_cast<StageId>(stages.size()))) {
      throw ConfigError("stage dependency out of range");
    }
  }
  if (fine_of_stage.size() != stages.size()) {
    throw ConfigError("fine_of_stage size does not match stage count");
  }
  for (std::size_t i = 0; i < fine.size(); ++i) {
    const FineTask& f = fine[i];
    if (f.id != static_cast<TaskId>(i)) throw ConfigError("fine task ids must be dense");
    if (f.parent_stage < 0 || f.parent_stage >= static_cast<StageId>(stages.size())) {
      throw ConfigError("fine task parent stage out of range");
    }
    if (f.base_cost_ms <= 0.0) throw ConfigError("fine task base cost must be positive");
    for (TaskId p : f.predecessors) {
      if (p < 0 || p >= static_cast<TaskId>(fine.size())) {
        throw ConfigError("fine task predecessor out of range");
      }
      if (fine[p].parent_stage != f.parent_stage) {
        throw ConfigError("fine task predecessor crosses stage boundary");
      }
    }
  }
}

std::vector<FineTask> expand_stage(const StageTask& task, const PipelineTemplate& tmpl,
                                   TaskId first_fine_id,
                                   const std::vector<double>& node_costs_ms) {
  if (static_cast<int>(node_costs_ms.size()) != tmpl.node_count()) {
    throw ConfigError("node cost list does not match template node count");
  }
  const auto preds = tmpl.predecessors();
  std::vector<FineTask> out;
  out.reserve(tmpl.nodes.size());
  for (int i = 0; i < tmpl.node_count(); ++i) {
    FineTask f;
    f.id = first_fine_id + i;
    f.op = tmpl.nodes[i];
    f.parent_stage = task.id;
    for (int p : preds[i]) f.predecessors.push_back(first_fine_id + p);
    f.base_cost_ms = node_costs_ms[i];
    out.push_back(std::move(f));
  }
  return out;
}

Workload generate_workload(int n_tiles, const OperationProfile& profile, std::uint64_t seed,
                           const WorkloadOptions& options) {
  if (n_tiles <= 0) throw ConfigError("tile count must be positive");
  profile.validate();

  Workload w;
  w.tile_count = n_tiles;
  w.seed = seed;
  std::mt19937_64 gen(seed);

  for (int tile = 0; tile < n_tiles; ++tile) {
    const StageId seg_id = static_cast<StageId>(2 * tile);
    const StageId feat_id = seg_id + 1;
    w.stages.push_back({seg_id, tile, StageKind::Segmentation, std::nullopt});
    w.stages.push_back({feat_id, tile, StageKind::FeatureComputation, seg_id});

    for (const StageTask& stage : {w.stages[seg_id], w.stages[feat_id]}) {
      const PipelineTemplate& tmpl = options.templates.of(stage.stage);
      const double stage_base =
          options.tile_base_ms * profile.stage_weight(stage.stage);
      std::vector<double> costs;
      costs.reserve(tmpl.nodes.size());
      for (OperationKind op : tmpl.nodes) {
        const double jitter =
            uniform_in(gen, 1.0 - options.jitter_frac, 1.0 + options.jitter_frac);
        costs.push_back(stage_base * profile.stage_share(op) * jitter);
      }
      const TaskId first = static_cast<TaskId>(w.fine.size());
      auto tasks = expand_stage(stage, tmpl, first, costs);
      std::vector<TaskId> ids;
      ids.reserve(tasks.size());
      for (FineTask& f : tasks) {
        ids.push_back(f.id);
        w.fine.push_back(std::move(f));
      }
      w.fine_of_stage.push_back(std::move(ids));
    }
  }
  w.validate();
  return w;
}

double estimate_time(const FineTask& task, DeviceClass cls, const OperationProfile& profile) {
  return task.base_cost_ms / profile.speedup(task.op, cls);
}

double speedup_of(const FineTask& task, DeviceClass cls, const OperationProfile& profile) {
  return profile.speedup(task.op, cls);
}

}  // namespace hetsched
