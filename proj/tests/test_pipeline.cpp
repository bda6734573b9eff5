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

#include <filesystem>
#include <sstream>

#include "hetsched/common.hpp"
#include "hetsched/pipeline.hpp"

using namespace hetsched;

TEST_SUITE("pipeline") {

TEST_CASE("segmentation template is the seven-operation chain") {
  const PipelineTemplate t = build_pipeline_template(StageKind::Segmentation);
  REQUIRE(t.node_count() == 7);
  CHECK(t.stage == StageKind::Segmentation);
  CHECK(t.nodes[0] == OperationKind::RGB2Gray);
  CHECK(t.nodes[1] == OperationKind::MorphOpen);
  CHECK(t.nodes[2] == OperationKind::MorphRecon);
  CHECK(t.nodes[3] == OperationKind::AreaThreshold);
  CHECK(t.nodes[4] == OperationKind::FillHoles);
  CHECK(t.nodes[5] == OperationKind::DistTransform);
  CHECK(t.nodes[6] == OperationKind::CCL);
  REQUIRE(t.edges.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(t.edges[static_cast<std::size_t>(i)].first == i);
    CHECK(t.edges[static_cast<std::size_t>(i)].second == i + 1);
  }
  CHECK_NOTHROW(t.validate());
}

TEST_CASE("feature template fans out from the deconvolution node") {
  const PipelineTemplate t = build_pipeline_template(StageKind::FeatureComputation);
  REQUIRE(t.node_count() == 4);
  CHECK(t.nodes[0] == OperationKind::ColorDeconv);
  REQUIRE(t.edges.size() == 3);
  for (const auto& [from, to] : t.edges) {
    CHECK(from == 0);
    CHECK(to >= 1);
    CHECK(to <= 3);
  }
  CHECK_NOTHROW(t.validate());
}

TEST_CASE("topological order respects edges and prefers small indices") {
  const PipelineTemplate seg = build_pipeline_template(StageKind::Segmentation);
  const auto order = seg.topo_order();
  REQUIRE(static_cast<int>(order.size()) == seg.node_count());
  for (int i = 0; i < seg.node_count(); ++i) CHECK(order[static_cast<std::size_t>(i)] == i);

  PipelineTemplate diamond;
  diamond.nodes = {OperationKind::RGB2Gray, OperationKind::MorphOpen, OperationKind::MorphRecon,
                   OperationKind::CCL};
  diamond.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  CHECK(diamond.topo_order() == std::vector<int>{0, 1, 2, 3});

  const auto preds = diamond.predecessors();
  REQUIRE(preds.size() == 4);
  CHECK(preds[0].empty());
  CHECK(preds[1] == std::vector<int>{0});
  CHECK(preds[3] == std::vector<int>{1, 2});
}

TEST_CASE("validation rejects malformed graphs") {
  PipelineTemplate bad;
  bad.nodes = {OperationKind::RGB2Gray, OperationKind::MorphOpen};

  bad.edges = {{0, 5}};
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad.edges = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad.edges = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad.edges = {{0, 0}};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("defaults bundle both stages") {
  const PipelineTemplates all = PipelineTemplates::defaults();
  CHECK(all.segmentation.node_count() == 7);
  CHECK(all.feature.node_count() == 4);
  CHECK(&all.of(StageKind::Segmentation) == &all.segmentation);
  CHECK(&all.of(StageKind::FeatureComputation) == &all.feature);
}

TEST_CASE("template files override one stage and keep the other built-in") {
  std::istringstream in(
      "stage=Segmentation\n"
      "node=RGB2Gray\n"
      "node=MorphRecon\n"
      "edge from=0 to=1\n");
  const PipelineTemplates t = parse_templates(in, "test");
  REQUIRE(t.segmentation.node_count() == 2);
  CHECK(t.segmentation.nodes[1] == OperationKind::MorphRecon);
  REQUIRE(t.segmentation.edges.size() == 1);
  CHECK(t.feature.node_count() == 4);
}

TEST_CASE("template file errors") {
  {
    std::istringstream in("node=RGB2Gray\n");
    CHECK_THROWS_AS((void)parse_templates(in, "test"), ConfigError);
  }
  {
    std::istringstream in("stage=Segmentation\nnode=NotAnOp\n");
    CHECK_THROWS_AS((void)parse_templates(in, "test"), ConfigError);
  }
  {
    std::istringstream in("stage=Segmentation\nnode=RGB2Gray\nedge from=0 to=7\n");
    CHECK_THROWS_AS((void)parse_templates(in, "test"), ConfigError);
  }
}

TEST_CASE("shipped template file matches the built-ins") {
  const std::filesystem::path path =
      std::filesystem::path(HETSCHED_DATA_DIR) / "default_templates.txt";
  const PipelineTemplates from_file = load_templates(path);
  const PipelineTemplates built = PipelineTemplates::defaults();
  CHECK(from_file.segmentation.nodes == built.segmentation.nodes);
  CHECK(from_file.segmentation.edges == built.segmentation.edges);
  CHECK(from_file.feature.nodes == built.feature.nodes);
  CHECK(from_file.feature.edges == built.feature.edges);
}

}
