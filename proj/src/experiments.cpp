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
#include "hetsched/experiments.hpp"

#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "hetsched/common.hpp"
#include "hetsched/estimates.hpp"

namespace hetsched {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

void write_rows_csv(const std::vector<ExperimentRow>& rows, std::ostream& out) {
  out << "experiment,policy,window,config,error_pct,nodes,seed,makespan_ms,"
         "util_cpu,util_gpu,util_mic\n";
  for (const ExperimentRow& r : rows) {
    out << r.experiment << ',' << r.policy << ',' << r.window << ',' << r.config << ','
        << fmt(r.error_pct) << ',' << r.nodes << ',' << r.seed << ',' << fmt(r.makespan_ms)
        << ',' << fmt(r.util_cpu) << ',' << fmt(r.util_gpu) << ',' << fmt(r.util_mic) << '\n';
  }
}

std::vector<ExperimentRow> read_rows_csv(std::istream& in, const std::string& source) {
  std::vector<ExperimentRow> rows;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (!saw_header) {
      if (cells.empty() || cells[0] != "experiment") {
        throw ConfigError(source + ":" + std::to_string(lineno) + ": missing CSV header");
      }
      saw_header = true;
      continue;
    }
    if (cells.size() != 11) {
      throw ConfigError(source + ":" + std::to_string(lineno) + ": expected 11 columns, got " +
                        std::to_string(cells.size()));
    }
    try {
      ExperimentRow r;
      r.experiment = cells[0];
      r.policy = cells[1];
      r.window = std::stoi(cells[2]);
      r.config = cells[3];
      r.error_pct = std::stod(cells[4]);
      r.nodes = std::stoi(cells[5]);
      r.seed = std::stoull(cells[6]);
      r.makespan_ms = std::stod(cells[7]);
      r.util_cpu = std::stod(cells[8]);
      r.util_gpu = std::stod(cells[9]);
      r.util_mic = std::stod(cells[10]);
      rows.push_back(std::move(r));
    } catch (const std::invalid_argument&) {
      throw ConfigError(source + ":" + std::to_string(lineno) + ": malformed numeric cell");
    } catch (const std::out_of_range&) {
      throw ConfigError(source + ":" + std::to_string(lineno) + ": numeric cell out of range");
    }
  }
  if (!saw_header) throw ConfigError(source + ": empty CSV");
  return rows;
}

ExperimentRow run_once(const ExperimentContext& ctx, const std::string& experiment,
                       PolicyKind policy, int window, const ClusterConfig& cluster,
                       const std::string& config_label, double error_pct,
                       std::uint64_t perturb_seed) {
  WorkloadOptions wopts;
  wopts.tile_base_ms = ctx.tile_base_ms;
  wopts.jitter_frac = ctx.jitter_frac;
  wopts.templates = ctx.templates;
  const Workload workload = generate_workload(ctx.tiles, ctx.profile, ctx.seed, wopts);

  const EstimateTable truth = EstimateTable::from_profile(ctx.profile, ctx.tile_base_ms);
  const EstimateTable sched =
      error_pct > 0.0 ? perturb_estimates(truth, error_pct, perturb_seed) : truth;

  SimOptions sopts;
  sopts.policy = policy;
  sopts.window_size = window;
  sopts.io_latency_ms = ctx.io_latency_ms;
  const SimResult result = run_simulation(workload, cluster, ctx.profile, sched, sopts);

  ExperimentRow row;
  row.experiment = experiment;
  row.policy = std::string(to_string(policy));
  row.window = window;
  row.config = config_label;
  row.error_pct = error_pct;
  row.nodes = cluster.node_count();
  row.seed = error_pct > 0.0 ? perturb_seed : ctx.seed;
  row.makespan_ms = result.report.makespan_ms;
  row.util_cpu = result.report.utilization[static_cast<int>(DeviceClass::CPUCore)];
  row.util_gpu = result.report.utilization[static_cast<int>(DeviceClass::GPU)];
  row.util_mic = result.report.utilization[static_cast<int>(DeviceClass::MIC)];
  return row;
}

std::vector<ExperimentRow> sweep_window(const ExperimentContext& ctx,
                                        const std::vector<PolicyKind>& policies,
                                        const std::vector<int>& windows,
                                        const std::string& node_name) {
  const ClusterConfig cluster = ClusterConfig::homogeneous(make_config(node_name), 1);
  std::vector<ExperimentRow> rows;
  for (PolicyKind policy : policies) {
    for (int w : windows) {
      rows.push_back(run_once(ctx, "sweep-window", policy, w, cluster, node_name, 0.0, 0));
    }
  }
  return rows;
}

std::vector<ExperimentRow> sweep_config(const ExperimentContext& ctx,
                                        const std::vector<PolicyKind>& policies,
                                        const std::vector<std::string>& node_names, int window) {
  std::vector<ExperimentRow> rows;
  for (PolicyKind policy : policies) {
    for (const std::string& name : node_names) {
      const ClusterConfig cluster = ClusterConfig::homogeneous(make_config(name), 1);
      rows.push_back(run_once(ctx, "sweep-config", policy, window, cluster, name, 0.0, 0));
    }
  }
  return rows;
}

std::vector<ExperimentRow> sweep_error(const ExperimentContext& ctx,
                                       const std::vector<PolicyKind>& policies,
                                       const std::vector<double>& error_pcts,
                                       const std::vector<std::uint64_t>& perturb_seeds,
                                       int window, const std::string& node_name) {
  const ClusterConfig cluster = ClusterConfig::homogeneous(make_config(node_name), 1);
  std::vector<ExperimentRow> rows;
  for (PolicyKind policy : policies) {
    for (double err : error_pcts) {
      if (err <= 0.0) {
        rows.push_back(run_once(ctx, "sweep-error", policy, window, cluster, node_name, 0.0, 0));
        continue;
      }
      for (std::uint64_t ps : perturb_seeds) {
        rows.push_back(run_once(ctx, "sweep-error", policy, window, cluster, node_name, err, ps));
      }
    }
  }
  return rows;
}

std::vector<ExperimentRow> scale_strong(const ExperimentContext& ctx, PolicyKind policy,
                                        const std::vector<int>& node_counts,
                                        const std::string& node_name, int window) {
  std::vector<ExperimentRow> rows;
  for (int n : node_counts) {
    const ClusterConfig cluster = ClusterConfig::homogeneous(make_config(node_name), n);
    rows.push_back(run_once(ctx, "scale-strong", policy, window, cluster, node_name, 0.0, 0));
  }
  return rows;
}

std::vector<ExperimentRow> scale_weak(const ExperimentContext& ctx, PolicyKind policy,
                                      const std::vector<int>& node_counts,
                                      const std::string& node_name, int window) {
  std::vector<ExperimentRow> rows;
  for (int n : node_counts) {
    ExperimentContext scaled = ctx;
    scaled.tiles = ctx.tiles * n;
    scaled.io_latency_ms = ctx.io_latency_ms * n;
    const ClusterConfig cluster = ClusterConfig::homogeneous(make_config(node_name), n);
    rows.push_back(run_once(scaled, "scale-weak", policy, window, cluster, node_name, 0.0, 0));
  }
  return rows;
}

void summarize_rows(const std::vector<ExperimentRow>& rows, std::ostream& out) {
  struct Agg {
    int count = 0;
    double makespan = 0.0, cpu = 0.0, gpu = 0.0, mic = 0.0;
  };
  using Key = std::tuple<std::string, std::string, int, std::string, double, int>;
  std::vector<Key> order;
  std::map<Key, Agg> groups;
  for (const ExperimentRow& r : rows) {
    const Key key{r.experiment, r.policy, r.window, r.config, r.error_pct, r.nodes};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.count += 1;
    it->second.makespan += r.makespan_ms;
    it->second.cpu += r.util_cpu;
    it->second.gpu += r.util_gpu;
    it->second.mic += r.util_mic;
  }
  out << std::left << std::setw(14) << "experiment" << std::setw(8) << "policy" << std::right
      << std::setw(7) << "window" << std::setw(16) << "config" << std::setw(10) << "error%"
      << std::setw(7) << "nodes" << std::setw(6) << "runs" << std::setw(14) << "makespan_ms"
      << std::setw(10) << "util_cpu" << std::setw(10) << "util_gpu" << std::setw(10)
      << "util_mic" << '\n';
  for (const Key& key : order) {
    const Agg& a = groups.at(key);
    const double n = a.count;
    out << std::left << std::setw(14) << std::get<0>(key) << std::setw(8) << std::get<1>(key)
        << std::right << std::setw(7) << std::get<2>(key) << std::setw(16) << std::get<3>(key)
        << std::setw(10) << std::fixed << std::setprecision(1) << std::get<4>(key)
        << std::setw(7) << std::get<5>(key) << std::setw(6) << a.count << std::setw(14)
        << std::setprecision(3) << a.makespan / n << std::setw(10) << std::setprecision(4)
        << a.cpu / n << std::setw(10) << a.gpu / n << std::setw(10) << a.mic / n << '\n';
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace hetsched
