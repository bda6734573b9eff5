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

#include <array>
#include <string_view>

namespace hetsched {

// Fine-grain operation types of the two-stage tile pipeline.
enum class OperationKind : int {
  RGB2Gray = 0,
  MorphOpen,
  MorphRecon,
  AreaThreshold,
  FillHoles,
  DistTransform,
  CCL,
  ColorDeconv,
  PixelStats,
  GradientStats,
  SobelEdge,
};

inline constexpr int kOperationCount = 11;

enum class StageKind : int {
  Segmentation = 0,
  FeatureComputation = 1,
};

inline constexpr int kStageCount = 2;

// Dominant memory access behaviour of an operation.
enum class AccessClass : int {
  Regular = 0,     // coalesced / streaming accesses
  Irregular = 1,   // data-dependent accesses (wavefront propagation)
  AtomicHeavy = 2  // throughput bound by atomic updates
};

// Parallelisation strategy an operation admits.
enum class ParallelismKind : int {
  Data = 0,       // independent per-pixel map
  Object = 1,     // independent per-object/per-region work
  Iwpp = 2,       // irregular wavefront propagation
  Reduction = 3,  // global reduction then filter
  UnionFind = 4   // disjoint-set merging
};

struct OperationTraits {
  AccessClass access;
  ParallelismKind parallelism;
  StageKind stage;
};

const OperationTraits& traits_of(OperationKind op);

std::array<OperationKind, kOperationCount> all_operations();

std::string_view to_string(OperationKind op);
std::string_view to_string(StageKind stage);
std::string_view to_string(AccessClass access);
std::string_view to_string(ParallelismKind par);

// Throws ConfigError when the name is unknown.
OperationKind operation_from_string(std::string_view name);
StageKind stage_from_string(std::string_view name);

}  // namespace hetsched
