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
#include <string_view>
#include <vector>

namespace hetsched {

enum class DeviceClass : int {
  CPUCore = 0,  // one host core; the speedup baseline
  GPU = 1,
  MIC = 2,
};

inline constexpr int kDeviceClassCount = 3;

std::string_view to_string(DeviceClass cls);
DeviceClass device_from_string(std::string_view name);

std::array<DeviceClass, kDeviceClassCount> all_device_classes();

// Measured device microbenchmark rates kept for reporting and sanity checks:
// random access in MB/s, atomic throughput in millions of ops/s.
struct DeviceBenchmarks {
  double random_read_mbs = 0.0;
  double random_write_mbs = 0.0;
  double atomic_single_mops = 0.0;
  double atomic_array_mops = 0.0;
};

struct DeviceBenchmarkTable {
  std::array<DeviceBenchmarks, kDeviceClassCount> by_class{};
  const DeviceBenchmarks& of(DeviceClass cls) const {
    return by_class[static_cast<int>(cls)];
  }
};

DeviceBenchmarkTable parse_device_benchmarks(std::istream& in, const std::string& source);
DeviceBenchmarkTable load_device_benchmarks(const std::filesystem::path& path);

// One machine: a fixed pool of CPU cores plus optional accelerators.  Each
// accelerator is driven by a dedicated host core, so reserved_cores always
// equals gpus + mics and those cores run no tasks themselves.
struct NodeConfig {
  std::string name = "custom";
  int cpu_cores = 0;
  int gpus = 0;
  int mics = 0;
  int reserved_cores = 0;

  int usable_cores() const { return cpu_cores - reserved_cores; }
  // Task-capable slots: usable cores + one slot per accelerator.
  int slot_count() const { return usable_cores() + gpus + mics; }
  void validate() const;  // throws ConfigError
};

// Named standard layouts of a 16-core node: "CPU-GPU", "CPU-MIC",
// "CPU-GPU-MIC", "CPU-only", "MIC-only".
NodeConfig make_config(std::string_view name);

struct ClusterConfig {
  std::vector<NodeConfig> nodes;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int total_slots() const;
  int slots_of(DeviceClass cls) const;
  void validate() const;  // throws ConfigError

  static ClusterConfig homogeneous(const NodeConfig& node, int count);
};

ClusterConfig parse_cluster_config(std::istream& in, const std::string& source);
ClusterConfig load_cluster_config(const std::filesystem::path& path);

}  // namespace hetsched
