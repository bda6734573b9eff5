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
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hetsched/common.hpp"
#include "hetsched/config_text.hpp"
#include "hetsched/device.hpp"
#include "hetsched/estimates.hpp"
#include "hetsched/experiments.hpp"
#include "hetsched/kernels/validate.hpp"
#include "hetsched/pipeline.hpp"
#include "hetsched/policy.hpp"
#include "hetsched/profile.hpp"
#include "hetsched/sim.hpp"
#include "hetsched/workload.hpp"

namespace hs = hetsched;

namespace {

// Exit codes: 0 success, 1 internal error, 2 bad configuration or usage,
// 3 simulation deadlock, 4 kernel validation mismatch.
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDeadlock = 3;
constexpr int kExitMismatch = 4;

struct CommonOpts {
  std::string profile_path;
  std::string templates_path;
  double tile_base_ms = 1000.0;
  double jitter = 0.10;
  int tiles = 80;
  std::uint64_t seed = 42;
  double io_latency_ms = 0.0;
  std::string out_path;
};

hs::ExperimentContext make_context(const CommonOpts& opts) {
  hs::ExperimentContext ctx;
  if (!opts.profile_path.empty()) ctx.profile = hs::OperationProfile::load(opts.profile_path);
  if (!opts.templates_path.empty()) ctx.templates = hs::load_templates(opts.templates_path);
  ctx.profile.validate();
  ctx.tile_base_ms = opts.tile_base_ms;
  ctx.jitter_frac = opts.jitter;
  ctx.tiles = opts.tiles;
  ctx.seed = opts.seed;
  ctx.io_latency_ms = opts.io_latency_ms;
  return ctx;
}

std::vector<hs::PolicyKind> parse_policies(const std::vector<std::string>& names) {
  if (names.empty()) return hs::all_policies();
  std::vector<hs::PolicyKind> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(hs::policy_from_string(n));
  return out;
}

void emit_rows(const std::vector<hs::ExperimentRow>& rows, const std::string& out_path) {
  if (out_path.empty()) {
    hs::write_rows_csv(rows, std::cout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw hs::ConfigError("cannot open output file " + out_path);
  hs::write_rows_csv(rows, out);
  std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

template <typename T, typename Fn>
std::vector<T> map_list(const std::vector<std::string>& parts, Fn fn) {
  std::vector<T> out;
  out.reserve(parts.size());
  for (const std::string& p : parts) out.push_back(fn(p));
  return out;
}

// One experiment description from a run-config line; unknown names and
// malformed values surface as ConfigError with the file location.
std::vector<hs::ExperimentRow> run_entry(const hs::ExperimentContext& base,
                                         const hs::ConfigEntry& e, const std::string& source) {
  hs::ExperimentContext ctx = base;
  if (e.has("tiles")) ctx.tiles = static_cast<int>(e.get_int(source, "tiles"));
  if (e.has("seed")) ctx.seed = static_cast<std::uint64_t>(e.get_int(source, "seed"));
  if (e.has("tile-base")) ctx.tile_base_ms = e.get_double(source, "tile-base");
  if (e.has("jitter")) ctx.jitter_frac = e.get_double(source, "jitter");
  if (e.has("io-latency")) ctx.io_latency_ms = e.get_double(source, "io-latency");

  auto loc = [&]() { return source + ":" + std::to_string(e.line) + ": "; };
  auto to_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw hs::ConfigError(loc() + "non-integer list element '" + s + "'");
    }
  };
  auto to_double = [&](const std::string& s) {
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw hs::ConfigError(loc() + "non-numeric list element '" + s + "'");
    }
  };
  auto to_seed = [&](const std::string& s) {
    try {
      return static_cast<std::uint64_t>(std::stoull(s));
    } catch (const std::exception&) {
      throw hs::ConfigError(loc() + "non-integer list element '" + s + "'");
    }
  };
  const int window = e.has("window") ? static_cast<int>(e.get_int(source, "window")) : 30;
  if (e.name == "sweep-window") {
    const auto policies = parse_policies(split_list(e.get(source, "policies")));
    const auto windows = map_list<int>(split_list(e.get(source, "windows")), to_int);
    return hs::sweep_window(ctx, policies, windows, e.get(source, "node"));
  }
  if (e.name == "sweep-config") {
    const auto policies = parse_policies(split_list(e.get(source, "policies")));
    return hs::sweep_config(ctx, policies, split_list(e.get(source, "nodes")), window);
  }
  if (e.name == "sweep-error") {
    const auto policies = parse_policies(split_list(e.get(source, "policies")));
    const auto errors = map_list<double>(split_list(e.get(source, "errors")), to_double);
    const auto seeds = map_list<std::uint64_t>(split_list(e.get(source, "perturb-seeds")), to_seed);
    return hs::sweep_error(ctx, policies, errors, seeds, window, e.get(source, "node"));
  }
  if (e.name == "scale-strong" || e.name == "scale-weak") {
    const hs::PolicyKind policy = hs::policy_from_string(e.get(source, "policy"));
    const auto counts = map_list<int>(split_list(e.get(source, "node-counts")), to_int);
    if (e.name == "scale-strong") {
      return hs::scale_strong(ctx, policy, counts, e.get(source, "node"), window);
    }
    return hs::scale_weak(ctx, policy, counts, e.get(source, "node"), window);
  }
  throw hs::ConfigError(loc() + "unknown experiment '" + e.name + "'");
}

int dispatch(CLI::App& app, const CommonOpts& common) {
  if (app.got_subcommand("profile")) {
    const hs::ExperimentContext ctx = make_context(common);
    const hs::EstimateTable table = hs::EstimateTable::from_profile(ctx.profile, common.tile_base_ms);
    std::printf("%-16s %-12s %-9s %10s %11s %9s %9s %9s\n", "operation", "stage", "access",
                "app_share", "stage_share", "cpu_ms", "gpu_x", "mic_x");
    for (hs::OperationKind op : hs::all_operations()) {
      const auto& traits = hs::traits_of(op);
      std::printf("%-16s %-12s %-9s %10.4f %11.4f %9.3f %9.3f %9.3f\n",
                  std::string(hs::to_string(op)).c_str(),
                  std::string(hs::to_string(traits.stage)).c_str(),
                  std::string(hs::to_string(traits.access)).c_str(), ctx.profile.app_share(op),
                  ctx.profile.stage_share(op), table.time_ms(op, hs::DeviceClass::CPUCore),
                  ctx.profile.speedup(op, hs::DeviceClass::GPU),
                  ctx.profile.speedup(op, hs::DeviceClass::MIC));
    }
    std::printf("stage weight %s = %.4f\n",
                std::string(hs::to_string(hs::StageKind::Segmentation)).c_str(),
                ctx.profile.stage_weight(hs::StageKind::Segmentation));
    std::printf("stage weight %s = %.4f\n",
                std::string(hs::to_string(hs::StageKind::FeatureComputation)).c_str(),
                ctx.profile.stage_weight(hs::StageKind::FeatureComputation));
    return 0;
  }
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-driven laboratory for scheduling pipelines on CPU/GPU/MIC nodes"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--profile", common.profile_path, "Operation profile file (default built-in)");
  app.add_option("--templates", common.templates_path, "Pipeline template file (default built-in)");
  app.add_option("--tile-base", common.tile_base_ms, "Single-core ms per tile before jitter");
  app.add_option("--jitter", common.jitter, "Cost jitter half-width fraction");
  app.add_option("--tiles", common.tiles, "Number of input tiles");
  app.add_option("--seed", common.seed, "Workload seed");
  app.add_option("--io-latency", common.io_latency_ms, "Stage transfer latency in ms");
  app.add_option("-o,--out", common.out_path, "Output CSV path (default stdout)");

  // sweep-window
  auto* sw = app.add_subcommand("sweep-window", "Makespan versus dispatch window size");
  std::vector<std::string> sw_policies;
  std::vector<int> sw_windows{16, 30, 45, 60, 70};
  std::string sw_node = "CPU-GPU-MIC";
  sw->add_option("--policies", sw_policies, "Policies (default all)");
  sw->add_option("--windows", sw_windows, "Window sizes");
  sw->add_option("--node", sw_node, "Node layout name");

  // sweep-config
  auto* sc = app.add_subcommand("sweep-config", "Makespan across node layouts");
  std::vector<std::string> sc_policies;
  std::vector<std::string> sc_nodes{"CPU-only", "CPU-GPU", "CPU-MIC", "CPU-GPU-MIC"};
  int sc_window = 30;
  sc->add_option("--policies", sc_policies, "Policies (default all)");
  sc->add_option("--nodes", sc_nodes, "Node layout names");
  sc->add_option("--window", sc_window, "Dispatch window size");

  // sweep-error
  auto* se = app.add_subcommand("sweep-error", "Sensitivity to estimate error");
  std::vector<std::string> se_policies;
  std::vector<double> se_errors{0, 10, 25, 50, 75, 100};
  std::vector<std::uint64_t> se_seeds;
  int se_window = 30;
  std::string se_node = "CPU-GPU-MIC";
  int se_seed_count = 20;
  se->add_option("--policies", se_policies, "Policies (default all)");
  se->add_option("--errors", se_errors, "Error percentages");
  se->add_option("--perturb-seeds", se_seeds, "Explicit perturbation seeds");
  se->add_option("--perturb-seed-count", se_seed_count,
                 "Use seeds 1..N when none are given explicitly");
  se->add_option("--window", se_window, "Dispatch window size");
  se->add_option("--node", se_node, "Node layout name");

  // scale-strong / scale-weak
  auto* ss = app.add_subcommand("scale-strong", "Fixed work, growing cluster");
  auto* swk = app.add_subcommand("scale-weak", "Work grows with the cluster");
  std::string scale_policy = "pams";
  std::vector<int> scale_counts{1, 2, 4, 8, 16};
  std::string scale_node = "CPU-GPU-MIC";
  int scale_window = 30;
  for (CLI::App* sub : {ss, swk}) {
    sub->add_option("--policy", scale_policy, "Policy");
    sub->add_option("--node-counts", scale_counts, "Cluster sizes");
    sub->add_option("--node", scale_node, "Node layout name");
    sub->add_option("--window", scale_window, "Dispatch window size");
  }

  // simulate
  auto* sim = app.add_subcommand("simulate", "Single run with optional event trace");
  std::string sim_policy = "pams";
  std::string sim_node = "CPU-GPU-MIC";
  std::string sim_cluster_path;
  int sim_window = 30;
  int sim_nodes = 1;
  double sim_error = 0.0;
  std::uint64_t sim_perturb_seed = 1;
  std::string sim_trace_path;
  sim->add_option("--policy", sim_policy, "Policy");
  sim->add_option("--node", sim_node, "Node layout name");
  sim->add_option("--cluster", sim_cluster_path, "Cluster config file (overrides --node/--nodes)");
  sim->add_option("--window", sim_window, "Dispatch window size");
  sim->add_option("--nodes", sim_nodes, "Node count");
  sim->add_option("--error", sim_error, "Estimate error percent");
  sim->add_option("--perturb-seed", sim_perturb_seed, "Estimate perturbation seed");
  sim->add_option("--trace", sim_trace_path, "Write the event trace CSV here");

  // validate-kernels
  auto* vk = app.add_subcommand("validate-kernels", "Compare kernels against naive references");
  hs::KernelValidationOptions vk_opts;
  vk->add_option("--grids", vk_opts.grids, "Number of random grids");
  vk->add_option("--min-size", vk_opts.min_size, "Minimum grid side");
  vk->add_option("--max-size", vk_opts.max_size, "Maximum grid side");
  vk->add_option("--kernel-seed", vk_opts.seed, "Validation seed");
  vk->add_option("--threads", vk_opts.thread_counts, "Thread counts to exercise");

  // profile
  app.add_subcommand("profile", "Print the operation profile and derived times");

  // summarize
  auto* sum = app.add_subcommand("summarize", "Aggregate a results CSV");
  std::string sum_in;
  sum->add_option("--in", sum_in, "Results CSV (default stdin)");

  // run
  auto* run = app.add_subcommand("run", "Run the experiments listed in a config file");
  std::string run_config;
  run->add_option("--config", run_config, "Experiment config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const int handled = dispatch(app, common);
    if (handled >= 0) return handled;

    if (app.got_subcommand(sw)) {
      const auto ctx = make_context(common);
      emit_rows(hs::sweep_window(ctx, parse_policies(sw_policies), sw_windows, sw_node),
                common.out_path);
    } else if (app.got_subcommand(sc)) {
      const auto ctx = make_context(common);
      emit_rows(hs::sweep_config(ctx, parse_policies(sc_policies), sc_nodes, sc_window),
                common.out_path);
    } else if (app.got_subcommand(se)) {
      const auto ctx = make_context(common);
      if (se_seeds.empty()) {
        for (int i = 1; i <= se_seed_count; ++i) se_seeds.push_back(static_cast<std::uint64_t>(i));
      }
      emit_rows(
          hs::sweep_error(ctx, parse_policies(se_policies), se_errors, se_seeds, se_window, se_node),
          common.out_path);
    } else if (app.got_subcommand(ss)) {
      const auto ctx = make_context(common);
      emit_rows(hs::scale_strong(ctx, hs::policy_from_string(scale_policy), scale_counts,
                                 scale_node, scale_window),
                common.out_path);
    } else if (app.got_subcommand(swk)) {
      const auto ctx = make_context(common);
      emit_rows(hs::scale_weak(ctx, hs::policy_from_string(scale_policy), scale_counts,
                               scale_node, scale_window),
                common.out_path);
    } else if (app.got_subcommand(sim)) {
      const auto ctx = make_context(common);
      hs::ClusterConfig cluster;
      if (!sim_cluster_path.empty()) {
        std::ifstream in(sim_cluster_path);
        if (!in) throw hs::ConfigError("cannot open " + sim_cluster_path);
        cluster = hs::parse_cluster_config(in, sim_cluster_path);
      } else {
        cluster = hs::ClusterConfig::homogeneous(hs::make_config(sim_node), sim_nodes);
      }
      hs::WorkloadOptions wopts;
      wopts.tile_base_ms = ctx.tile_base_ms;
      wopts.jitter_frac = ctx.jitter_frac;
      wopts.templates = ctx.templates;
      const hs::Workload workload = hs::generate_workload(ctx.tiles, ctx.profile, ctx.seed, wopts);
      const hs::EstimateTable truth = hs::EstimateTable::from_profile(ctx.profile, ctx.tile_base_ms);
      const hs::EstimateTable sched =
          sim_error > 0.0 ? hs::perturb_estimates(truth, sim_error, sim_perturb_seed) : truth;
      hs::SimOptions sopts;
      sopts.policy = hs::policy_from_string(sim_policy);
      sopts.window_size = sim_window;
      sopts.io_latency_ms = ctx.io_latency_ms;
      const hs::SimResult result = hs::run_simulation(workload, cluster, ctx.profile, sched, sopts);
      if (!sim_trace_path.empty()) {
        std::ofstream out(sim_trace_path);
        if (!out) throw hs::ConfigError("cannot open output file " + sim_trace_path);
        hs::write_trace_csv(result.trace, out);
        std::cerr << "wrote " << result.trace.size() << " trace rows to " << sim_trace_path
                  << "\n";
      }
      const hs::SimReport& rep = result.report;
      std::printf("makespan_ms %.6f\n", rep.makespan_ms);
      std::printf("tasks %lld stages %lld\n", rep.tasks_completed, rep.stages_completed);
      for (int cls = 0; cls < hs::kDeviceClassCount; ++cls) {
        std::printf("class %s busy_ms %.6f utilization %.4f tasks %lld\n",
                    std::string(hs::to_string(static_cast<hs::DeviceClass>(cls))).c_str(),
                    rep.busy_ms[cls], rep.utilization[cls],
                    rep.class_total(static_cast<hs::DeviceClass>(cls)));
      }
    } else if (app.got_subcommand(vk)) {
      const hs::KernelValidationStats stats = hs::validate_kernels(vk_opts);
      std::printf("validated %lld grids, %lld comparisons, all matched\n", stats.grids,
                  stats.comparisons);
    } else if (app.got_subcommand(sum)) {
      std::vector<hs::ExperimentRow> rows;
      if (sum_in.empty()) {
        rows = hs::read_rows_csv(std::cin, "stdin");
      } else {
        std::ifstream in(sum_in);
        if (!in) throw hs::ConfigError("cannot open " + sum_in);
        rows = hs::read_rows_csv(in, sum_in);
      }
      hs::summarize_rows(rows, std::cout);
    } else if (app.got_subcommand(run)) {
      const auto ctx = make_context(common);
      std::vector<hs::ExperimentRow> rows;
      for (const hs::ConfigEntry& e : hs::load_config_text(run_config)) {
        std::vector<hs::ExperimentRow> part = run_entry(ctx, e, run_config);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      emit_rows(rows, common.out_path);
    }
    return 0;
  } catch (const hs::KernelMismatch& e) {
    std::cerr << "kernel mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const hs::SimDeadlock& e) {
    std::cerr << "deadlock: " << e.what() << "\n";
    return kExitDeadlock;
  } catch (const hs::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
