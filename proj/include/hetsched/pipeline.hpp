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

#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

#include "hetsched/ops.hpp"

namespace hetsched {

// Operation DAG a stage task expands into.  Nodes are operation instances;
// edges run from producer to consumer.
struct PipelineTemplate {
  StageKind stage = StageKind::Segmentation;
  std::vector<OperationKind> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes, from -> to

  int node_count() const { return static_cast<int>(nodes.size()); }
  // Throws ConfigError on out-of-range edges, duplicate edges or cycles.
  void validate() const;
  // Deterministic topological order (Kahn, smallest node index first).
  std::vector<int> topo_order() const;
  std::vector<std::vector<int>> predecessors() const;
};

// Built-in per-stage DAGs.  Segmentation is the seven-operation chain
// RGB2Gray -> MorphOpen -> MorphRecon -> AreaThreshold -> FillHoles ->
// DistTransform -> CCL; FeatureComputation fans ColorDeconv out into the
// three per-object statistics operations.
PipelineTemplate build_pipeline_template(StageKind stage);

struct PipelineTemplates {
  PipelineTemplate segmentation;
  PipelineTemplate feature;

  const PipelineTemplate& of(StageKind stage) const {
    return stage == StageKind::Segmentation ? segmentation : feature;
  }
  static PipelineTemplates defaults();
};

// Template file format, one stage per block:
//   stage=Segmentation
//   node=RGB2Gray
//   node=MorphOpen
//   edge from=0 to=1
// A file may define one or both stages; missing stages fall back to the
// built-in templates.
PipelineTemplates parse_templates(std::istream& in, const std::string& source);
PipelineTemplates load_templates(const std::filesystem::path& path);

}  // namespace hetsched
