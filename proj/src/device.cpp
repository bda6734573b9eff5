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
#include "hetsched/device.hpp"

#include <fstream>
#include <sstream>

#include "hetsched/common.hpp"
#include "hetsched/config_text.hpp"

namespace hetsched {

std::string_view to_string(DeviceClass cls) {
  switch (cls) {
    case DeviceClass::CPUCore: return "CPU";
    case DeviceClass::GPU: return "GPU";
    case DeviceClass::MIC: return "MIC";
  }
  return "?";
}

DeviceClass device_from_string(std::string_view name) {
  if (name == "CPU" || name == "CPUCore" || name == "cpu") return DeviceClass::CPUCore;
  if (name == "GPU" || name == "gpu") return DeviceClass::GPU;
  if (name == "MIC" || name == "mic") return DeviceClass::MIC;
  throw ConfigError("unknown device class '" + std::string(name) + "'");
}

std::array<DeviceClass, kDeviceClassCount> all_device_classes() {
  return {DeviceClass::CPUCore, DeviceClass::GPU, DeviceClass::MIC};
}

DeviceBenchmarkTable parse_device_benchmarks(std::istream& in, const std::string& source) {
  DeviceBenchmarkTable table;
  std::array<bool, kDeviceClassCount> seen{};
  for (const ConfigEntry& e : parse_config_text(in, source)) {
    if (e.name.empty()) {
      throw ConfigError(source + ":" + std::to_string(e.line) + ": missing device name");
    }
    const DeviceClass cls = device_from_string(e.name);
    DeviceBenchmarks b;
    b.random_read_mbs = e.get_double(source, "random_read");
    b.random_write_mbs = e.get_double(source, "random_write");
    b.atomic_single_mops = e.get_double(source, "atomic_single");
    b.atomic_array_mops = e.get_double(source, "atomic_array");
    table.by_class[static_cast<int>(cls)] = b;
    seen[static_cast<int>(cls)] = true;
  }
  for (DeviceClass cls : all_device_classes()) {
    if (!seen[static_cast<int>(cls)]) {
      throw ConfigError(source + ": missing benchmark row for device '" +
                        std::string(to_string(cls)) + "'");
    }
  }
  return table;
}

DeviceBenchmarkTable load_device_benchmarks(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open benchmark file '" + path.string() + "'");
  return parse_device_benchmarks(in, path.filename().string());
}

void NodeConfig::validate() const {
  if (cpu_cores < 0 || gpus < 0 || mics < 0 || reserved_cores < 0) {
    throw ConfigError("node '" + name + "': negative device counts");
  }
  if (reserved_cores != gpus + mics) {
    std::ostringstream os;
    os << "node '" << name << "': reserved_cores=" << reserved_cores
       << " must equal accelerator count " << (gpus + mics);
    throw ConfigError(os.str());
  }
  if (usable_cores() < 0) {
    throw ConfigError("node '" + name + "': more reserved cores than CPU cores");
  }
  if (slot_count() <= 0) {
    throw ConfigError("node '" + name + "': no task-capable slots");
  }
}

NodeConfig make_config(std::string_view name) {
  NodeConfig n;
  n.name = std::string(name);
  if (name == "CPU-GPU") {
    n.cpu_cores = 16; n.gpus = 1; n.mics = 0; n.reserved_cores = 1;
  } else if (name == "CPU-MIC") {
    n.cpu_cores = 16; n.gpus = 0; n.mics = 1; n.reserved_cores = 1;
  } else if (name == "CPU-GPU-MIC") {
    n.cpu_cores = 16; n.gpus = 1; n.mics = 1; n.reserved_cores = 2;
  } else if (name == "CPU-only") {
    n.cpu_cores = 16; n.gpus = 0; n.mics = 0; n.reserved_cores = 0;
  } else if (name == "MIC-only") {
    // The one usable device is the accelerator; its manager core is the only
    // CPU core the run touches.
    n.cpu_cores = 1; n.gpus = 0; n.mics = 1; n.reserved_cores = 1;
  } else {
    throw ConfigError("unknown node configuration '" + std::string(name) + "'");
  }
  n.validate();
  return n;
}

int ClusterConfig::total_slots() const {
  int total = 0;
  for (const NodeConfig& n : nodes) total += n.slot_count();
  return total;
}

int ClusterConfig::slots_of(DeviceClass cls) const {
  int total = 0;
  for (const NodeConfig& n : nodes) {
    switch (cls) {
      case DeviceClass::CPUCore: total += n.usable_cores(); break;
      case DeviceClass::GPU: total += n.gpus; break;
      case DeviceClass::MIC: total += n.mics; break;
    }
  }
  return total;
}

void ClusterConfig::validate() const {
  if (nodes.empty()) throw ConfigError("cluster has no nodes");
  for (const NodeConfig& n : nodes) n.validate();
}

ClusterConfig ClusterConfig::homogeneous(const NodeConfig& node, int count) {
  if (count <= 0) throw ConfigError("cluster node count must be positive");
  ClusterConfig c;
  c.nodes.assign(static_cast<std::size_t>(count), node);
  c.validate();
  return c;
}

ClusterConfig parse_cluster_config(std::istream& in, const std::string& source) {
  NodeConfig node;
  bool have_node = false;
  int count = 1;
  for (const ConfigEntry& e : parse_config_text(in, source)) {
    const std::string& key = e.name.empty() && !e.values.empty() ? e.values.front().first : e.name;
    if (key == "node") {
      const std::string value =
          e.name.empty() ? e.values.front().second : e.get(source, "name");
      node = make_config(value);
      have_node = true;
    } else if (key == "nodes") {
      const std::string value = e.name.empty() ? e.values.front().second : e.get(source, "count");
      char* end = nullptr;
      count = static_cast<int>(std::strtol(value.c_str(), &end, 10));
      if (end == value.c_str() || *end != '\0') {
        throw ConfigError(source + ":" + std::to_string(e.line) +
                          ": key 'nodes' has non-integer value '" + value + "'");
      }
    } else if (key == "custom-node") {
      node.name = "custom";
      node.cpu_cores = static_cast<int>(e.get_int(source, "cpu_cores"));
      node.gpus = static_cast<int>(e.get_int(source, "gpus"));
      node.mics = static_cast<int>(e.get_int(source, "mics"));
      node.reserved_cores = node.gpus + node.mics;
      node.validate();
      have_node = true;
    } else {
      throw ConfigError(source + ":" + std::to_string(e.line) + ": unknown entry '" + key + "'");
    }
  }
  if (!have_node) throw ConfigError(source + ": missing 'node' entry");
  return ClusterConfig::homogeneous(node, count);
}

ClusterConfig load_cluster_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open cluster file '" + path.string() + "'");
  return parse_cluster_config(in, path.filename().string());
}

}  // namespace hetsched
