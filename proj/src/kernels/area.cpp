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
#include "hetsched/kernels/area.hpp"

#include <atomic>
#include <stdexcept>

#include "hetsched/kernels/ccl.hpp"

namespace hetsched {

Grid2D area_threshold(const Grid2D& binary, int min_area, int max_area, Connectivity conn,
                      int threads) {
  if (min_area < 1 || min_area > max_area) {
    throw std::invalid_argument("area threshold needs 1 <= min_area <= max_area");
  }
  const Grid2D labels = connected_components(binary, conn, threads);
  std::vector<std::int32_t> count(static_cast<std::size_t>(binary.size()) + 1, 0);
  Grid2D out(binary.width, binary.height, 0);

#ifdef HETSCHED_HAVE_OPENMP
  if (threads > 1) {
    #pragma omp parallel for num_threads(threads)
    for (int i = 0; i < binary.size(); ++i) {
      if (labels[i] == 0) continue;
      std::atomic_ref<std::int32_t> c(count[static_cast<std::size_t>(labels[i])]);
      c.fetch_add(1, std::memory_order_relaxed);
    }
    #pragma omp parallel for num_threads(threads)
    for (int i = 0; i < binary.size(); ++i) {
      if (labels[i] == 0) continue;
      const std::int32_t n = count[static_cast<std::size_t>(labels[i])];
      if (n >= min_area && n <= max_area) out[i] = binary[i];
    }
    return out;
  }
#else
  (void)threads;
#endif

  for (int i = 0; i < binary.size(); ++i) {
    if (labels[i] != 0) ++count[static_cast<std::size_t>(labels[i])];
  }
  for (int i = 0; i < binary.size(); ++i) {
    if (labels[i] == 0) continue;
    const std::int32_t n = count[static_cast<std::size_t>(labels[i])];
    if (n >= min_area && n <= max_area) out[i] = binary[i];
  }
  return out;
}

}  // namespace hetsched
