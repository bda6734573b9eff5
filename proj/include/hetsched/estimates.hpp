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
#include <cstdint>

#include "hetsched/profile.hpp"

namespace hetsched {

// Per-(operation, device) execution-time estimates the schedulers see.  The
// simulator itself always runs tasks at their true rates; experiments that
// study estimation error perturb only this table.
class EstimateTable {
public:
  EstimateTable();

  double time_ms(OperationKind op, DeviceClass cls) const;  // throws ConfigError if unset
  void set_time_ms(OperationKind op, DeviceClass cls, double value);

  // Derived speedup: time on one CPU core / time on the device.
  double speedup(OperationKind op, DeviceClass cls) const;

  void validate() const;  // all entries present and positive

  // Type-level times from the profile: tile_base_ms * app_share / speedup.
  // Per-task jitter is deliberately absent; estimates describe the operation
  // type, not the instance.
  static EstimateTable from_profile(const OperationProfile& profile, double tile_base_ms);

private:
  std::array<std::array<double, kDeviceClassCount>, kOperationCount> time_ms_;
};

struct PerturbStats {
  int clamped_entries = 0;     // entries pinned at 1% of truth
  bool canonical_pct = true;   // error_pct was one of {0,10,25,50,75,100}
};

// Multiplies every entry by (1 + s * error_pct/100) with s = +1 or -1 with
// equal probability per entry, drawn deterministically from the seed.  An
// entry driven to or below zero is clamped at 1% of its true value and
// counted in stats.
EstimateTable perturb_estimates(const EstimateTable& truth, double error_pct,
                                std::uint64_t seed, PerturbStats* stats = nullptr);

}  // namespace hetsched
