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
#include <filesystem>
#include <istream>
#include <string>

#include "hetsched/device.hpp"
#include "hetsched/ops.hpp"

namespace hetsched {

// Calibration data for the workload: per-operation device speedups relative
// to one CPU core, and per-operation shares of the total single-core time of
// one tile.  Speedup on a CPU core is the baseline and is pinned to 1.0.
class OperationProfile {
public:
  // Profile with no entries; tests and tools fill it via the setters.
  OperationProfile();

  double speedup(OperationKind op, DeviceClass cls) const;  // throws ConfigError if unset
  bool has_speedup(OperationKind op, DeviceClass cls) const;
  void set_speedup(OperationKind op, DeviceClass cls, double value);

  // Share of the tile's total single-core time (shares over all eleven
  // operations sum to 1).
  double app_share(OperationKind op) const;
  void set_app_share(OperationKind op, double value);

  // Share within the operation's own stage (shares over a stage sum to 1).
  double stage_share(OperationKind op) const;
  // Fraction of the tile's single-core time spent in the stage.
  double stage_weight(StageKind stage) const;

  // Throws ConfigError describing the first violated constraint.
  void validate() const;

  bool operator==(const OperationProfile& other) const = default;

  static OperationProfile defaults();
  static OperationProfile parse(std::istream& in, const std::string& source);
  static OperationProfile load(const std::filesystem::path& path);

private:
  std::array<std::array<double, kDeviceClassCount>, kOperationCount> speedups_;
  std::array<double, kOperationCount> shares_;
};

}  // namespace hetsched
