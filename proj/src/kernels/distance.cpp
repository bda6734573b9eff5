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
#include "hetsched/kernels/distance.hpp"

#include <atomic>
#include <limits>

#include "hetsched/common.hpp"
#include "hetsched/kernels/iwpp.hpp"

namespace hetsched {
namespace {

constexpr std::int32_t kUnset = std::numeric_limits<std::int32_t>::max();

Grid2D seed_distances(const Grid2D& binary, std::vector<int>& seeds) {
  if (binary.width <= 0 || binary.height <= 0) throw ConfigError("grids must be non-empty");
  Grid2D dist(binary.width, binary.height, kUnset);
  for (int i = 0; i < binary.size(); ++i) {
    if (binary[i] == 0) {
      dist[i] = 0;
      seeds.push_back(i);
    }
  }
  if (seeds.empty()) throw ConfigError("distance transform needs at least one zero pixel");
  return dist;
}

Grid2D distance_serial(const Grid2D& binary, Connectivity conn) {
  std::vector<int> seeds;
  Grid2D dist = seed_distances(binary, seeds);
  iwpp_run(dist, std::move(seeds), Monotone::NonIncreasing, conn,
           [](std::int32_t src, std::int32_t dst, int) -> std::optional<std::int32_t> {
             const std::int32_t v = src + 1;
             return v < dst ? std::optional<std::int32_t>(v) : std::nullopt;
           });
  return dist;
}

#ifdef HETSCHED_HAVE_OPENMP
Grid2D distance_parallel(const Grid2D& binary, Connectivity conn, int threads) {
  std::vector<int> frontier;
  Grid2D dist = seed_distances(binary, frontier);
  const auto& offsets = neighbor_offsets(conn);
  std::int32_t level = 0;
  while (!frontier.empty()) {
    const std::int32_t next_level = level + 1;
    std::vector<int> next;
    #pragma omp parallel num_threads(threads)
    {
      std::vector<int> local;
      #pragma omp for nowait
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        const int p = frontier[i];
        const int px = p % dist.width;
        const int py = p / dist.width;
        for (const auto& [dx, dy] : offsets) {
          if (!dist.in_bounds(px + dx, py + dy)) continue;
          const int q = dist.index(px + dx, py + dy);
          std::atomic_ref<std::int32_t> cell(dist.data[static_cast<std::size_t>(q)]);
          std::int32_t cur = cell.load(std::memory_order_relaxed);
          // The winning thread alone appends q, so the next frontier holds
          // each pixel once.
          while (cur > next_level) {
            if (cell.compare_exchange_weak(cur, next_level, std::memory_order_relaxed)) {
              local.push_back(q);
              break;
            }
          }
        }
      }
      #pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
    frontier = std::move(next);
    level = next_level;
  }
  return dist;
}
#endif

}  // namespace

Grid2D distance_transform(const Grid2D& binary, Connectivity conn, int threads) {
#ifdef HETSCHED_HAVE_OPENMP
  if (threads > 1) return distance_parallel(binary, conn, threads);
#endif
  return distance_serial(binary, conn);
}

}  // namespace hetsched
