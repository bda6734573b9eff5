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
#include "hetsched/estimates.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "hetsched/common.hpp"

namespace hetsched {

EstimateTable::EstimateTable() {
  for (auto& row : time_ms_) row.fill(std::numeric_limits<double>::quiet_NaN());
}

double EstimateTable::time_ms(OperationKind op, DeviceClass cls) const {
  const double v = time_ms_[static_cast<int>(op)][static_cast<int>(cls)];
  if (std::isnan(v)) {
    throw ConfigError("estimate table has no entry for (" + std::string(to_string(op)) +
                      ", " + std::string(to_string(cls)) + ")");
  }
  return v;
}

void EstimateTable::set_time_ms(OperationKind op, DeviceClass cls, double value) {
  time_ms_[static_cast<int>(op)][static_cast<int>(cls)] = value;
}

double EstimateTable::speedup(OperationKind op, DeviceClass cls) const {
  return time_ms(op, DeviceClass::CPUCore) / time_ms(op, cls);
}

void EstimateTable::validate() const {
  for (OperationKind op : all_operations()) {
    for (DeviceClass cls : all_device_classes()) {
      if (time_ms(op, cls) <= 0.0) {
        throw ConfigError("estimate for (" + std::string(to_string(op)) + ", " +
                          std::string(to_string(cls)) + ") must be positive");
      }
    }
  }
}

EstimateTable EstimateTable::from_profile(const OperationProfile& profile, double tile_base_ms) {
  if (tile_base_ms <= 0.0) throw ConfigError("tile base time must be positive");
  EstimateTable t;
  for (OperationKind op : all_operations()) {
    const double cpu_time = tile_base_ms * profile.app_share(op);
    for (DeviceClass cls : all_device_classes()) {
      t.set_time_ms(op, cls, cpu_time / profile.speedup(op, cls));
    }
  }
  t.validate();
  return t;
}

EstimateTable perturb_estimates(const EstimateTable& truth, double error_pct,
                                std::uint64_t seed, PerturbStats* stats) {
  if (error_pct < 0.0) throw ConfigError("error percentage must be non-negative");
  PerturbStats local;
  for (double canonical : {0.0, 10.0, 25.0, 50.0, 75.0, 100.0}) {
    if (error_pct == canonical) { local.canonical_pct = true; break; }
    local.canonical_pct = false;
  }

  std::mt19937_64 gen(seed);
  EstimateTable out;
  // Fixed (operation, device) draw order keeps the perturbation reproducible.
  for (OperationKind op : all_operations()) {
    for (DeviceClass cls : all_device_classes()) {
      const double sign = (gen() & 1) ? 1.0 : -1.0;
      const double t = truth.time_ms(op, cls);
      double v = t * (1.0 + sign * error_pct / 100.0);
      if (v <= 0.0) {
        v = 0.01 * t;
        ++local.clamped_entries;
      }
      out.set_time_ms(op, cls, v);
    }
  }
  out.validate();
  if (stats) *stats = local;
  return out;
}

}  // namespace hetsched
