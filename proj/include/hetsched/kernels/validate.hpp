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
#include <vector>

namespace hetsched {

struct KernelValidationOptions {
  int grids = 200;
  int min_size = 8;
  int max_size = 64;
  std::uint64_t seed = 1;
  // 1 exercises the serial path; larger counts the parallel one.
  std::vector<int> thread_counts = {1, 4};
};

struct KernelValidationStats {
  long long grids = 0;
  long long comparisons = 0;
};

// Runs every production kernel against its naive reference on random grids
// of both connectivities.  First disagreement throws KernelMismatch naming
// the kernel, grid seed, and thread count.
KernelValidationStats validate_kernels(const KernelValidationOptions& options = {});

}  // namespace hetsched
