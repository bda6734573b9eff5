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
#include "hetsched/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <optional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "hetsched/common.hpp"

namespace hetsched {

std::string_view to_string(TraceEventKind kind) {
  switch (kind) {
    case TraceEventKind::TaskStart: return "task_start";
    case TraceEventKind::TaskFinish: return "task_finish";
    case TraceEventKind::StageComplete: return "stage_complete";
    case TraceEventKind::WindowRefill: return "window_refill";
  }
  throw ConfigError("unknown trace event kind");
}

long long SimReport::class_total(DeviceClass cls) const {
  long long total = 0;
  for (int op = 0; op < kOperationCount; ++op) {
    total += assignments[op][static_cast<int>(cls)];
  }
  return total;
}

namespace {

// Heap event kinds, in tie order at equal times: finishes land first, then
// stage completions, then window refills.
enum EvKind : int { kTaskFinish = 0, kStageComplete = 1, kWindowRefill = 2 };

struct Ev {
  double t;
  int kind;
  std::int64_t id;
};

struct EvLater {
  bool operator()(const Ev& a, const Ev& b) const {
    if (a.t != b.t) return a.t > b.t;
    if (a.kind != b.kind) return a.kind > b.kind;
    return a.id > b.id;
  }
};

enum class TaskState : int { Blocked, Ready, Staged, Running, Done };

// One staged transfer per accelerator slot: the input buffer for the next
// task is filled while the current one computes.
constexpr std::size_t kStageDepth = 1;

struct Worker {
  int index = 0;
  std::vector<SlotRef> slots;
  std::vector<std::size_t> poll_order;  // accelerator slots before core slots
  std::unique_ptr<ReadyPolicy> policy;
  std::vector<std::optional<TaskId>> running;  // by per-worker slot
  std::vector<std::deque<TaskId>> staged;      // accelerator inputs staged behind the running task
  int window_count = 0;
  double io_free_ms = 0.0;  // stage-in channel is serial per worker
};

struct Engine {
  const Workload& wl;
  const ClusterConfig& cluster;
  const OperationProfile& truth;
  const SimOptions& opts;

  std::vector<Worker> workers;
  std::priority_queue<Ev, std::vector<Ev>, EvLater> heap;
  std::deque<StageId> pending;
  std::size_t rr = 0;

  std::vector<TaskState> state;
  std::vector<int> pending_preds;
  std::vector<std::vector<TaskId>> successors;
  std::vector<int> stage_remaining;
  std::vector<int> worker_of_stage;
  std::vector<std::pair<int, int>> slot_of_task;  // (worker, slot)
  std::vector<StageId> unlocks;                   // seg stage -> feat stage, else -1
  long long stages_done = 0;
  bool self_check;
  bool staging = false;

  std::vector<TraceEvent> trace;

  Engine(const Workload& wl_, const ClusterConfig& cluster_, const OperationProfile& truth_,
         const EstimateTable& estimates, const SimOptions& opts_)
      : wl(wl_), cluster(cluster_), truth(truth_), opts(opts_) {
    if (opts.window_size < 1) throw ConfigError("window size must be at least 1");
    if (opts.io_latency_ms < 0.0) throw ConfigError("io latency must be non-negative");
    wl.validate();
    cluster.validate();
    self_check = !opts.policy_factory && opts.policy != PolicyKind::HEFT;
    // Accelerators overlap input staging with computation: while a slot is
    // busy it may claim the next task, which then starts the instant the
    // slot frees. HEFT places tasks from its own plan, so nothing is
    // claimed ahead for it; injected test policies keep plain semantics.
    staging = self_check;

    workers.resize(cluster.nodes.size());
    for (std::size_t n = 0; n < cluster.nodes.size(); ++n) {
      const NodeConfig& node = cluster.nodes[n];
      Worker& w = workers[n];
      w.index = static_cast<int>(n);
      int slot = 0;
      for (int i = 0; i < node.usable_cores(); ++i) w.slots.push_back({slot++, DeviceClass::CPUCore});
      for (int i = 0; i < node.gpus; ++i) w.slots.push_back({slot++, DeviceClass::GPU});
      for (int i = 0; i < node.mics; ++i) w.slots.push_back({slot++, DeviceClass::MIC});
      // When several slots free up at the same instant, accelerators ask for
      // work first. A core that wins the race for the last ready task can sit
      // on it for the time an idle accelerator would have spent on the whole
      // remaining tail.
      for (std::size_t i = 0; i < w.slots.size(); ++i)
        if (w.slots[i].cls != DeviceClass::CPUCore) w.poll_order.push_back(i);
      for (std::size_t i = 0; i < w.slots.size(); ++i)
        if (w.slots[i].cls == DeviceClass::CPUCore) w.poll_order.push_back(i);
      w.running.assign(w.slots.size(), std::nullopt);
      w.staged.assign(w.slots.size(), {});
      w.policy = opts.policy_factory ? opts.policy_factory(estimates, w.slots)
                                     : make_policy(opts.policy, estimates, w.slots);
    }

    const std::size_t ntasks = wl.fine.size();
    state.assign(ntasks, TaskState::Blocked);
    pending_preds.assign(ntasks, 0);
    successors.assign(ntasks, {});
    slot_of_task.assign(ntasks, {-1, -1});
    for (const FineTask& f : wl.fine) {
      pending_preds[f.id] = static_cast<int>(f.predecessors.size());
      for (TaskId p : f.predecessors) successors[p].push_back(f.id);
    }

    stage_remaining.assign(wl.stages.size(), 0);
    worker_of_stage.assign(wl.stages.size(), -1);
    unlocks.assign(wl.stages.size(), -1);
    for (const StageTask& s : wl.stages) {
      stage_remaining[s.id] = static_cast<int>(wl.fine_of_stage[s.id].size());
      if (s.depends_on) unlocks[*s.depends_on] = s.id;
    }
    // Stages without a dependency are dispatchable from the start, in id
    // order (segmentation stages in tile order).
    for (const StageTask& s : wl.stages) {
      if (!s.depends_on) pending.push_back(s.id);
    }
  }

  void dispatch(double now) {
    bool assigned = true;
    while (assigned && !pending.empty()) {
      assigned = false;
      for (std::size_t step = 0; step < workers.size() && !pending.empty(); ++step) {
        Worker& w = workers[rr];
        rr = (rr + 1) % workers.size();
        if (w.window_count >= opts.window_size) continue;
        const StageId s = pending.front();
        pending.pop_front();
        ++w.window_count;
        worker_of_stage[s] = w.index;
        // Stage-in transfers queue on the worker's channel, so concurrent
        // refills arrive pipelined rather than in one burst.
        const double arrival = std::max(now, w.io_free_ms) + opts.io_latency_ms;
        w.io_free_ms = arrival;
        heap.push({arrival, kWindowRefill, s});
        assigned = true;
      }
    }
  }

  void stage_row(double t, TraceEventKind kind, StageId s) {
    TraceEvent row;
    row.time_ms = t;
    row.kind = kind;
    row.id = s;
    row.stage = wl.stages[s].stage;
    row.worker = worker_of_stage[s];
    trace.push_back(row);
  }

  void task_row(double t, TraceEventKind kind, const FineTask& f, DeviceClass cls, int worker) {
    TraceEvent row;
    row.time_ms = t;
    row.kind = kind;
    row.id = f.id;
    row.op = f.op;
    row.stage = wl.stages[f.parent_stage].stage;
    row.cls = cls;
    row.worker = worker;
    trace.push_back(row);
  }

  void process(const Ev& ev) {
    switch (ev.kind) {
      case kTaskFinish: on_task_finish(ev.t, ev.id); break;
      case kStageComplete: on_stage_complete(ev.t, ev.id); break;
      case kWindowRefill: on_window_refill(ev.t, ev.id); break;
      default: throw std::logic_error("unknown event kind");
    }
  }

  void on_task_finish(double t, TaskId id) {
    const FineTask& f = wl.fine[id];
    const auto [wi, slot] = slot_of_task[id];
    Worker& w = workers[wi];
    task_row(t, TraceEventKind::TaskFinish, f, w.slots[slot].cls, wi);
    w.running[slot] = std::nullopt;
    w.policy->on_finish(f, t);
    if (!w.staged[slot].empty()) {
      const TaskId next = w.staged[slot].front();
      w.staged[slot].pop_front();
      start_task(t, w, static_cast<std::size_t>(slot), next);
    }
    state[id] = TaskState::Done;
    for (TaskId succ : successors[id]) {
      if (--pending_preds[succ] == 0) {
        state[succ] = TaskState::Ready;
        w.policy->insert(wl.fine[succ]);
      }
    }
    if (--stage_remaining[f.parent_stage] == 0) {
      heap.push({t, kStageComplete, f.parent_stage});
    }
  }

  void on_stage_complete(double t, StageId s) {
    stage_row(t, TraceEventKind::StageComplete, s);
    --workers[worker_of_stage[s]].window_count;
    ++stages_done;
    // An unlocked dependent stage joins the back of the dispatch backlog.
    // Long-chain stages then enter the window as early as possible, so the
    // tail of the run is made of short fan-out stages instead of a late
    // serial chain that nothing can overlap.
    if (unlocks[s] >= 0) pending.push_back(unlocks[s]);
  }

  void on_window_refill(double t, StageId s) {
    stage_row(t, TraceEventKind::WindowRefill, s);
    Worker& w = workers[worker_of_stage[s]];
    for (TaskId id : wl.fine_of_stage[s]) w.policy->add_window(wl.fine[id]);
    for (TaskId id : wl.fine_of_stage[s]) {
      if (pending_preds[id] == 0) {
        state[id] = TaskState::Ready;
        w.policy->insert(wl.fine[id]);
      }
    }
  }

  void start_task(double now, Worker& w, std::size_t slot, TaskId id) {
    const FineTask& f = wl.fine[id];
    state[id] = TaskState::Running;
    w.running[slot] = id;
    const double dur = f.base_cost_ms / speedup_of(f, w.slots[slot].cls, truth);
    heap.push({now + dur, kTaskFinish, id});
    task_row(now, TraceEventKind::TaskStart, f, w.slots[slot].cls, w.index);
  }

  std::optional<TaskId> take_checked(Worker& w, std::size_t slot, double now) {
    const std::optional<TaskId> got = w.policy->take(w.slots[slot], now);
    if (!got) return std::nullopt;
    const TaskId id = *got;
    if (id < 0 || static_cast<std::size_t>(id) >= state.size() ||
        state[id] != TaskState::Ready) {
      throw std::logic_error("policy handed out a task that is not ready");
    }
    slot_of_task[id] = {w.index, static_cast<int>(slot)};
    w.policy->on_start(wl.fine[id], w.slots[slot], now);
    return id;
  }

  void assign(double now) {
    for (Worker& w : workers) {
      bool idle_slot = false;
      for (std::size_t slot : w.poll_order) {
        if (w.running[slot]) {
          if (staging && w.slots[slot].cls != DeviceClass::CPUCore) {
            while (w.staged[slot].size() < kStageDepth) {
              const std::optional<TaskId> claimed = take_checked(w, slot, now);
              if (!claimed) break;
              state[*claimed] = TaskState::Staged;
              w.staged[slot].push_back(*claimed);
            }
          }
          continue;
        }
        const std::optional<TaskId> got = take_checked(w, slot, now);
        if (!got) {
          idle_slot = true;
          continue;
        }
        start_task(now, w, slot, *got);
      }
      if (self_check && idle_slot && !w.policy->ready_empty()) {
        throw std::logic_error("work-conserving policy idled a slot with ready work");
      }
    }
  }

  void run() {
    dispatch(0.0);
    while (!heap.empty()) {
      const double now = heap.top().t;
      bool settled = false;
      while (!settled) {
        while (!heap.empty() && heap.top().t == now) {
          const Ev ev = heap.top();
          heap.pop();
          process(ev);
        }
        dispatch(now);
        settled = heap.empty() || heap.top().t != now;
      }
      assign(now);
    }
    if (stages_done != static_cast<long long>(wl.stages.size())) {
      throw SimDeadlock("simulation stalled with " +
                        std::to_string(wl.stages.size() - stages_done) +
                        " stages unfinished");
    }
  }
};

}  // namespace

SimResult run_simulation(const Workload& workload, const ClusterConfig& cluster,
                         const OperationProfile& truth, const EstimateTable& sched_estimates,
                         const SimOptions& options) {
  sched_estimates.validate();
  Engine engine(workload, cluster, truth, sched_estimates, options);
  engine.run();
  SimResult result;
  result.trace = std::move(engine.trace);
  result.report = collect_report(result.trace, cluster);
  return result;
}

SimReport collect_report(const std::vector<TraceEvent>& trace, const ClusterConfig& cluster) {
  SimReport report;
  std::unordered_map<std::int64_t, double> started_at;
  for (const TraceEvent& row : trace) {
    switch (row.kind) {
      case TraceEventKind::TaskStart:
        started_at[row.id] = row.time_ms;
        report.assignments[static_cast<int>(row.op)][static_cast<int>(row.cls)] += 1;
        break;
      case TraceEventKind::TaskFinish: {
        auto it = started_at.find(row.id);
        if (it == started_at.end()) throw ConfigError("trace finishes a task it never started");
        report.busy_ms[static_cast<int>(row.cls)] += row.time_ms - it->second;
        started_at.erase(it);
        ++report.tasks_completed;
        report.makespan_ms = std::max(report.makespan_ms, row.time_ms);
        break;
      }
      case TraceEventKind::StageComplete:
        ++report.stages_completed;
        report.makespan_ms = std::max(report.makespan_ms, row.time_ms);
        break;
      case TraceEventKind::WindowRefill: break;
    }
  }
  for (int cls = 0; cls < kDeviceClassCount; ++cls) {
    const int slots = cluster.slots_of(static_cast<DeviceClass>(cls));
    report.utilization[cls] = (slots > 0 && report.makespan_ms > 0.0)
                                  ? report.busy_ms[cls] / (report.makespan_ms * slots)
                                  : 0.0;
  }
  return report;
}

void write_trace_csv(const std::vector<TraceEvent>& trace, std::ostream& out) {
  out << "time,event,task_id,op,device_class,worker_id\n";
  char buf[32];
  for (const TraceEvent& row : trace) {
    std::snprintf(buf, sizeof buf, "%.6f", row.time_ms);
    out << buf << ',' << to_string(row.kind) << ',' << row.id << ',';
    if (row.is_task_row()) {
      out << to_string(row.op) << ',' << to_string(row.cls);
    } else {
      out << to_string(row.stage) << ",-";
    }
    out << ',' << row.worker << '\n';
  }
}

}  // namespace hetsched
