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
#include "hetsched/profile.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hetsched/common.hpp"
#include "hetsched/config_text.hpp"

namespace hetsched {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct DefaultRow {
  OperationKind op;
  double share;
  double gpu;
  double mic;
};

// Calibration defaults.  The levels encode the measured behaviour of the
// three operation families: streaming operations gain little over the host
// memory system (GPU/MIC ratio 1.25), compute-bound per-object statistics run
// near-identically on both accelerators at roughly 1.9x a full 16-core host,
// wavefront operations favour the GPU (2x MIC for DistTransform, 1.33x for
// the reconstruction pair), and atomic-bound operations are the one family
// where the aggregate host outperforms the accelerators (host/MIC near 2.4).
constexpr DefaultRow kDefaults[kOperationCount] = {
    {OperationKind::RGB2Gray, 0.03, 10.0, 8.0},
    {OperationKind::MorphOpen, 0.05, 10.0, 8.0},
    {OperationKind::MorphRecon, 0.12, 16.0, 12.0},
    {OperationKind::AreaThreshold, 0.04, 9.0, 6.667},
    {OperationKind::FillHoles, 0.08, 16.0, 12.0},
    {OperationKind::DistTransform, 0.40, 32.0, 16.0},
    {OperationKind::CCL, 0.06, 9.0, 6.667},
    {OperationKind::ColorDeconv, 0.05, 10.0, 8.0},
    {OperationKind::PixelStats, 0.06, 30.4, 30.4},
    {OperationKind::GradientStats, 0.06, 30.4, 30.4},
    {OperationKind::SobelEdge, 0.05, 33.0, 30.4},
};

}  // namespace

OperationProfile::OperationProfile() {
  for (auto& row : speedups_) row.fill(kUnset);
  shares_.fill(kUnset);
}

double OperationProfile::speedup(OperationKind op, DeviceClass cls) const {
  const double v = speedups_[static_cast<int>(op)][static_cast<int>(cls)];
  if (std::isnan(v)) {
    throw ConfigError("profile has no speedup for (" + std::string(to_string(op)) + ", " +
                      std::string(to_string(cls)) + ")");
  }
  return v;
}

bool OperationProfile::has_speedup(OperationKind op, DeviceClass cls) const {
  return !std::isnan(speedups_[static_cast<int>(op)][static_cast<int>(cls)]);
}

void OperationProfile::set_speedup(OperationKind op, DeviceClass cls, double value) {
  speedups_[static_cast<int>(op)][static_cast<int>(cls)] = value;
}

double OperationProfile::app_share(OperationKind op) const {
  const double v = shares_[static_cast<int>(op)];
  if (std::isnan(v)) {
    throw ConfigError("profile has no cost share for " + std::string(to_string(op)));
  }
  return v;
}

void OperationProfile::set_app_share(OperationKind op, double value) {
  shares_[static_cast<int>(op)] = value;
}

double OperationProfile::stage_share(OperationKind op) const {
  return app_share(op) / stage_weight(traits_of(op).stage);
}

double OperationProfile::stage_weight(StageKind stage) const {
  double sum = 0.0;
  for (OperationKind op : all_operations()) {
    if (traits_of(op).stage == stage) sum += app_share(op);
  }
  return sum;
}

void OperationProfile::validate() const {
  double total = 0.0;
  for (OperationKind op : all_operations()) {
    const double cpu = speedup(op, DeviceClass::CPUCore);
    if (cpu != 1.0) {
      throw ConfigError("profile speedup for (" + std::string(to_string(op)) +
                        ", CPU) must be 1.0");
    }
    for (DeviceClass cls : all_device_classes()) {
      if (speedup(op, cls) <= 0.0) {
        throw ConfigError("profile speedup for (" + std::string(to_string(op)) + ", " +
                          std::string(to_string(cls)) + ") must be positive");
      }
    }
    const double share = app_share(op);
    if (share <= 0.0) {
      throw ConfigError("profile cost share for " + std::string(to_string(op)) +
                        " must be positive");
    }
    total += share;
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "profile cost shares sum to " << total << ", expected 1.0";
    throw ConfigError(os.str());
  }
  for (StageKind stage : {StageKind::Segmentation, StageKind::FeatureComputation}) {
    double stage_sum = 0.0;
    for (OperationKind op : all_operations()) {
      if (traits_of(op).stage == stage) stage_sum += stage_share(op);
    }
    if (std::fabs(stage_sum - 1.0) > 1e-9) {
      std::ostringstream os;
      os << "stage shares for " << to_string(stage) << " sum to " << stage_sum;
      throw ConfigError(os.str());
    }
  }
}

OperationProfile OperationProfile::defaults() {
  OperationProfile p;
  for (const DefaultRow& row : kDefaults) {
    p.set_speedup(row.op, DeviceClass::CPUCore, 1.0);
    p.set_speedup(row.op, DeviceClass::GPU, row.gpu);
    p.set_speedup(row.op, DeviceClass::MIC, row.mic);
    p.set_app_share(row.op, row.share);
  }
  p.validate();
  return p;
}

OperationProfile OperationProfile::parse(std::istream& in, const std::string& source) {
  OperationProfile p;
  for (const ConfigEntry& e : parse_config_text(in, source)) {
    if (e.name.empty()) {
      throw ConfigError(source + ":" + std::to_string(e.line) +
                        ": profile line is missing the operation name");
    }
    OperationKind op;
    try {
      op = operation_from_string(e.name);
    } catch (const ConfigError&) {
      throw ConfigError(source + ":" + std::to_string(e.line) + ": unknown operation '" +
                        e.name + "'");
    }
    if (!std::isnan(p.shares_[static_cast<int>(op)])) {
      throw ConfigError(source + ":" + std::to_string(e.line) + ": duplicate entry for '" +
                        e.name + "'");
    }
    const double cpu = e.has("cpu") ? e.get_double(source, "cpu") : 1.0;
    p.set_speedup(op, DeviceClass::CPUCore, cpu);
    p.set_speedup(op, DeviceClass::GPU, e.get_double(source, "gpu"));
    p.set_speedup(op, DeviceClass::MIC, e.get_double(source, "mic"));
    p.set_app_share(op, e.get_double(source, "share"));
  }
  for (OperationKind op : all_operations()) {
    if (std::isnan(p.shares_[static_cast<int>(op)])) {
      throw ConfigError(source + ": missing entry for operation '" +
                        std::string(to_string(op)) + "'");
    }
  }
  try {
    p.validate();
  } catch (const ConfigError& err) {
    throw ConfigError(source + ": " + err.what());
  }
  return p;
}

OperationProfile OperationProfile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open profile file '" + path.string() + "'");
  return parse(in, path.filename().string());
}

}  // namespace hetsched
