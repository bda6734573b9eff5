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
#include "hetsched/ops.hpp"

#include "hetsched/common.hpp"

namespace hetsched {

namespace {

constexpr OperationTraits kTraits[kOperationCount] = {
    // RGB2Gray
    {AccessClass::Regular, ParallelismKind::Data, StageKind::Segmentation},
    // MorphOpen
    {AccessClass::Regular, ParallelismKind::Data, StageKind::Segmentation},
    // MorphRecon
    {AccessClass::Irregular, ParallelismKind::Iwpp, StageKind::Segmentation},
    // AreaThreshold
    {AccessClass::AtomicHeavy, ParallelismKind::Reduction, StageKind::Segmentation},
    // FillHoles
    {AccessClass::Irregular, ParallelismKind::Iwpp, StageKind::Segmentation},
    // DistTransform
    {AccessClass::Irregular, ParallelismKind::Iwpp, StageKind::Segmentation},
    // CCL
    {AccessClass::AtomicHeavy, ParallelismKind::UnionFind, StageKind::Segmentation},
    // ColorDeconv
    {AccessClass::Regular, ParallelismKind::Data, StageKind::FeatureComputation},
    // PixelStats
    {AccessClass::Regular, ParallelismKind::Object, StageKind::FeatureComputation},
    // GradientStats
    {AccessClass::Regular, ParallelismKind::Object, StageKind::FeatureComputation},
    // SobelEdge
    {AccessClass::Regular, ParallelismKind::Object, StageKind::FeatureComputation},
};

constexpr std::string_view kOpNames[kOperationCount] = {
    "RGB2Gray",      "MorphOpen",  "MorphRecon", "AreaThreshold",
    "FillHoles",     "DistTransform", "CCL",     "ColorDeconv",
    "PixelStats",    "GradientStats", "SobelEdge",
};

}  // namespace

const OperationTraits& traits_of(OperationKind op) {
  return kTraits[static_cast<int>(op)];
}

std::array<OperationKind, kOperationCount> all_operations() {
  std::array<OperationKind, kOperationCount> ops{};
  for (int i = 0; i < kOperationCount; ++i) ops[i] = static_cast<OperationKind>(i);
  return ops;
}

std::string_view to_string(OperationKind op) {
  return kOpNames[static_cast<int>(op)];
}

std::string_view to_string(StageKind stage) {
  return stage == StageKind::Segmentation ? "Segmentation" : "FeatureComputation";
}

std::string_view to_string(AccessClass access) {
  switch (access) {
    case AccessClass::Regular: return "regular";
    case AccessClass::Irregular: return "irregular";
    case AccessClass::AtomicHeavy: return "atomic-heavy";
  }
  return "?";
}

std::string_view to_string(ParallelismKind par) {
  switch (par) {
    case ParallelismKind::Data: return "data";
    case ParallelismKind::Object: return "object";
    case ParallelismKind::Iwpp: return "iwpp";
    case ParallelismKind::Reduction: return "reduction";
    case ParallelismKind::UnionFind: return "union-find";
  }
  return "?";
}

OperationKind operation_from_string(std::string_view name) {
  for (int i = 0; i < kOperationCount; ++i) {
    if (kOpNames[i] == name) return static_cast<OperationKind>(i);
  }
  throw ConfigError("unknown operation name '" + std::string(name) + "'");
}

StageKind stage_from_string(std::string_view name) {
  if (name == "Segmentation") return StageKind::Segmentation;
  if (name == "FeatureComputation") return StageKind::FeatureComputation;
  throw ConfigError("unknown stage name '" + std::string(name) + "'");
}

}  // namespace hetsched
