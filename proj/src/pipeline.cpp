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
#include "hetsched/pipeline.hpp"

#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "hetsched/common.hpp"
#include "hetsched/config_text.hpp"

namespace hetsched {

void PipelineTemplate::validate() const {
  if (nodes.empty()) throw ConfigError("pipeline template has no nodes");
  std::set<std::pair<int, int>> seen;
  for (const auto& [from, to] : edges) {
    if (from < 0 || from >= node_count() || to < 0 || to >= node_count()) {
      std::ostringstream os;
      os << "pipeline edge (" << from << "," << to << ") out of range for "
         << node_count() << " nodes";
      throw ConfigError(os.str());
    }
    if (from == to) throw ConfigError("pipeline edge forms a self-loop");
    if (!seen.insert({from, to}).second) {
      std::ostringstream os;
      os << "duplicate pipeline edge (" << from << "," << to << ")";
      throw ConfigError(os.str());
    }
  }
  topo_order();  // throws on cycles
}

std::vector<int> PipelineTemplate::topo_order() const {
  const int n = node_count();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& [from, to] : edges) {
    succ[from].push_back(to);
    ++indegree[to];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : succ[u]) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw ConfigError("pipeline template contains a cycle");
  }
  return order;
}

std::vector<std::vector<int>> PipelineTemplate::predecessors() const {
  std::vector<std::vector<int>> preds(nodes.size());
  for (const auto& [from, to] : edges) preds[to].push_back(from);
  return preds;
}

PipelineTemplate build_pipeline_template(StageKind stage) {
  PipelineTemplate t;
  t.stage = stage;
  if (stage == StageKind::Segmentation) {
    t.nodes = {OperationKind::RGB2Gray,     OperationKind::MorphOpen,
               OperationKind::MorphRecon,   OperationKind::AreaThreshold,
               OperationKind::FillHoles,    OperationKind::DistTransform,
               OperationKind::CCL};
    for (int i = 0; i + 1 < t.node_count(); ++i) t.edges.emplace_back(i, i + 1);
  } else {
    t.nodes = {OperationKind::ColorDeconv, OperationKind::PixelStats,
               OperationKind::GradientStats, OperationKind::SobelEdge};
    t.edges = {{0, 1}, {0, 2}, {0, 3}};
  }
  t.validate();
  return t;
}

PipelineTemplates PipelineTemplates::defaults() {
  return {build_pipeline_template(StageKind::Segmentation),
          build_pipeline_template(StageKind::FeatureComputation)};
}

PipelineTemplates parse_templates(std::istream& in, const std::string& source) {
  PipelineTemplates result = PipelineTemplates::defaults();
  PipelineTemplate current;
  bool in_block = false;

  auto finish_block = [&]() {
    if (!in_block) return;
    current.validate();
    if (current.stage == StageKind::Segmentation) {
      result.segmentation = current;
    } else {
      result.feature = current;
    }
    current = PipelineTemplate{};
    in_block = false;
  };

  for (const ConfigEntry& e : parse_config_text(in, source)) {
    const std::string key = !e.name.empty() ? e.name : e.values.front().first;
    if (key == "stage") {
      finish_block();
      const std::string value = e.name.empty() ? e.values.front().second : e.get(source, "name");
      current.stage = stage_from_string(value);
      current.nodes.clear();
      current.edges.clear();
      in_block = true;
    } else if (key == "node") {
      if (!in_block) {
        throw ConfigError(source + ":" + std::to_string(e.line) + ": 'node' before any 'stage'");
      }
      const std::string value = e.name.empty() ? e.values.front().second : e.get(source, "op");
      current.nodes.push_back(operation_from_string(value));
    } else if (key == "edge") {
      if (!in_block) {
        throw ConfigError(source + ":" + std::to_string(e.line) + ": 'edge' before any 'stage'");
      }
      const int from = static_cast<int>(e.get_int(source, "from"));
      const int to = static_cast<int>(e.get_int(source, "to"));
      current.edges.emplace_back(from, to);
    } else {
      throw ConfigError(source + ":" + std::to_string(e.line) + ": unknown entry '" + key + "'");
    }
  }
  finish_block();
  return result;
}

PipelineTemplates load_templates(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open template file '" + path.string() + "'");
  return parse_templates(in, path.filename().string());
}

}  // namespace hetsched
