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
#include <doctest.h>

#include <cmath>

#include "hetsched/common.hpp"
#include "hetsched/estimates.hpp"

using namespace hetsched;

TEST_SUITE("estimates") {

TEST_CASE("from_profile lays down type-level times") {
  const OperationProfile p = OperationProfile::defaults();
  const EstimateTable t = EstimateTable::from_profile(p, 1000.0);
  CHECK_NOTHROW(t.validate());
  for (OperationKind op : all_operations()) {
    const double cpu = t.time_ms(op, DeviceClass::CPUCore);
    CHECK(cpu == doctest::Approx(1000.0 * p.app_share(op)));
    for (DeviceClass cls : all_device_classes()) {
      CHECK(t.time_ms(op, cls) == doctest::Approx(cpu / p.speedup(op, cls)));
      CHECK(t.speedup(op, cls) == doctest::Approx(p.speedup(op, cls)));
    }
  }
  CHECK(t.time_ms(OperationKind::DistTransform, DeviceClass::GPU) ==
        doctest::Approx(400.0 / 32.0));
  CHECK_THROWS_AS((void)EstimateTable::from_profile(p, 0.0), ConfigError);
}

TEST_CASE("unset entries are reported by name") {
  EstimateTable t;
  CHECK_THROWS_AS((void)t.time_ms(OperationKind::CCL, DeviceClass::MIC), ConfigError);
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t.set_time_ms(OperationKind::CCL, DeviceClass::MIC, 5.0);
  CHECK(t.time_ms(OperationKind::CCL, DeviceClass::MIC) == doctest::Approx(5.0));
}

TEST_CASE("zero error leaves the table untouched") {
  const EstimateTable truth = EstimateTable::from_profile(OperationProfile::defaults(), 1000.0);
  PerturbStats stats;
  const EstimateTable out = perturb_estimates(truth, 0.0, 42, &stats);
  for (OperationKind op : all_operations()) {
    for (DeviceClass cls : all_device_classes()) {
      CHECK(out.time_ms(op, cls) == doctest::Approx(truth.time_ms(op, cls)));
    }
  }
  CHECK(stats.clamped_entries == 0);
  CHECK(stats.canonical_pct);
}

TEST_CASE("perturbation scales entries by the signed error") {
  const EstimateTable truth = EstimateTable::from_profile(OperationProfile::defaults(), 1000.0);
  const EstimateTable out = perturb_estimates(truth, 25.0, 7);
  int ups = 0;
  int downs = 0;
  for (OperationKind op : all_operations()) {
    for (DeviceClass cls : all_device_classes()) {
      const double ratio = out.time_ms(op, cls) / truth.time_ms(op, cls);
      const bool up = std::fabs(ratio - 1.25) < 1e-12;
      const bool down = std::fabs(ratio - 0.75) < 1e-12;
      CHECK((up || down));
      ups += up ? 1 : 0;
      downs += down ? 1 : 0;
    }
  }
  CHECK(ups + downs == 33);
  // Both signs occur across the 33 entries.
  CHECK(ups > 0);
  CHECK(downs > 0);
}

TEST_CASE("perturbation is deterministic per seed") {
  const EstimateTable truth = EstimateTable::from_profile(OperationProfile::defaults(), 1000.0);
  const EstimateTable a = perturb_estimates(truth, 50.0, 11);
  const EstimateTable b = perturb_estimates(truth, 50.0, 11);
  const EstimateTable c = perturb_estimates(truth, 50.0, 12);
  bool all_equal = true;
  bool any_differs = false;
  for (OperationKind op : all_operations()) {
    for (DeviceClass cls : all_device_classes()) {
      if (a.time_ms(op, cls) != b.time_ms(op, cls)) all_equal = false;
      if (a.time_ms(op, cls) != c.time_ms(op, cls)) any_differs = true;
    }
  }
  CHECK(all_equal);
  CHECK(any_differs);
}

TEST_CASE("a full-error downward draw clamps at one percent of truth") {
  const EstimateTable truth = EstimateTable::from_profile(OperationProfile::defaults(), 1000.0);
  PerturbStats stats;
  const EstimateTable out = perturb_estimates(truth, 100.0, 3, &stats);
  CHECK(stats.clamped_entries > 0);
  CHECK(stats.canonical_pct);
  int clamped = 0;
  for (OperationKind op : all_operations()) {
    for (DeviceClass cls : all_device_classes()) {
      const double v = out.time_ms(op, cls);
      const double t = truth.time_ms(op, cls);
      CHECK(v > 0.0);
      const bool doubled = std::fabs(v - 2.0 * t) < 1e-9;
      const bool floored = std::fabs(v - 0.01 * t) < 1e-12;
      CHECK((doubled || floored));
      clamped += floored ? 1 : 0;
    }
  }
  CHECK(clamped == stats.clamped_entries);
}

TEST_CASE("non-canonical percentages are flagged, negatives rejected") {
  const EstimateTable truth = EstimateTable::from_profile(OperationProfile::defaults(), 1000.0);
  PerturbStats stats;
  (void)perturb_estimates(truth, 33.0, 1, &stats);
  CHECK_FALSE(stats.canonical_pct);
  CHECK_THROWS_AS((void)perturb_estimates(truth, -5.0, 1), ConfigError);
}

}
