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
#include "hetsched/policy.hpp"

#include <string>

#include "hetsched/common.hpp"
#include "hetsched/policy_fcfs.hpp"
#include "hetsched/policy_heft.hpp"
#include "hetsched/policy_padas.hpp"
#include "hetsched/policy_pams.hpp"

namespace hetsched {

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::FCFS: return "fcfs";
    case PolicyKind::PADAS: return "padas";
    case PolicyKind::PAMS: return "pams";
    case PolicyKind::HEFT: return "heft";
  }
  throw ConfigError("unknown policy kind");
}

PolicyKind policy_from_string(std::string_view name) {
  for (PolicyKind kind : all_policies()) {
    if (name == to_string(kind)) return kind;
  }
  throw ConfigError("unknown policy '" + std::string(name) +
                    "' (expected fcfs, padas, pams, or heft)");
}

std::vector<PolicyKind> all_policies() {
  return {PolicyKind::FCFS, PolicyKind::PADAS, PolicyKind::PAMS, PolicyKind::HEFT};
}

std::unique_ptr<ReadyPolicy> make_policy(PolicyKind kind, const EstimateTable& estimates,
                                         const std::vector<SlotRef>& slots) {
  switch (kind) {
    case PolicyKind::FCFS: return std::make_unique<FcfsQueue>();
    case PolicyKind::PADAS: return std::make_unique<PadasQueue>(estimates, slots);
    case PolicyKind::PAMS: return std::make_unique<PamsQueues>(estimates, slots);
    case PolicyKind::HEFT: return std::make_unique<HeftPolicy>(estimates, slots);
  }
  throw ConfigError("unknown policy kind");
}

}  // namespace hetsched
