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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hetsched/device.hpp"
#include "hetsched/policy.hpp"
#include "hetsched/profile.hpp"
#include "hetsched/sim.hpp"
#include "hetsched/workload.hpp"

namespace hetsched {

// One simulation outcome.  The seed column holds whichever seed the
// experiment varies: the estimate-perturbation seed for error sweeps, the
// workload seed otherwise.
struct ExperimentRow {
  std::string experiment;
  std::string policy;
  int window = 0;
  std::string config;
  double error_pct = 0.0;
  int nodes = 1;
  std::uint64_t seed = 0;
  double makespan_ms = 0.0;
  double util_cpu = 0.0;
  double util_gpu = 0.0;
  double util_mic = 0.0;
};

// CSV with the fixed column set
// experiment,policy,window,config,error_pct,nodes,seed,makespan_ms,util_cpu,util_gpu,util_mic.
void write_rows_csv(const std::vector<ExperimentRow>& rows, std::ostream& out);
std::vector<ExperimentRow> read_rows_csv(std::istream& in, const std::string& source);

// Shared inputs of all experiments; a fixed context makes reruns
// reproducible row for row.
struct ExperimentContext {
  OperationProfile profile = OperationProfile::defaults();
  PipelineTemplates templates = PipelineTemplates::defaults();
  double tile_base_ms = 1000.0;
  double jitter_frac = 0.10;
  int tiles = 80;
  std::uint64_t seed = 42;
  double io_latency_ms = 0.0;
};

// Single simulation run mapped to a row.
ExperimentRow run_once(const ExperimentContext& ctx, const std::string& experiment,
                       PolicyKind policy, int window, const ClusterConfig& cluster,
                       const std::string& config_label, double error_pct,
                       std::uint64_t perturb_seed);

// Makespan versus dispatch window size on one node layout.
std::vector<ExperimentRow> sweep_window(const ExperimentContext& ctx,
                                        const std::vector<PolicyKind>& policies,
                                        const std::vector<int>& windows,
                                        const std::string& node_name);

// Makespan across node layouts at a fixed window.
std::vector<ExperimentRow> sweep_config(const ExperimentContext& ctx,
                                        const std::vector<PolicyKind>& policies,
                                        const std::vector<std::string>& node_names, int window);

// Sensitivity to estimate error: each error level runs once per
// perturbation seed against the same workload.
std::vector<ExperimentRow> sweep_error(const ExperimentContext& ctx,
                                       const std::vector<PolicyKind>& policies,
                                       const std::vector<double>& error_pcts,
                                       const std::vector<std::uint64_t>& perturb_seeds,
                                       int window, const std::string& node_name);

// Fixed total work spread over growing clusters of identical nodes.
std::vector<ExperimentRow> scale_strong(const ExperimentContext& ctx, PolicyKind policy,
                                        const std::vector<int>& node_counts,
                                        const std::string& node_name, int window);

// Work and stage-transfer latency both grow with the cluster:
// tiles = ctx.tiles * n and latency = ctx.io_latency_ms * n.
std::vector<ExperimentRow> scale_weak(const ExperimentContext& ctx, PolicyKind policy,
                                      const std::vector<int>& node_counts,
                                      const std::string& node_name, int window);

// Per-group mean makespan and utilization over seeds, as an aligned text
// table; groups follow first appearance order.
void summarize_rows(const std::vector<ExperimentRow>& rows, std::ostream& out);

}  // namespace hetsched
