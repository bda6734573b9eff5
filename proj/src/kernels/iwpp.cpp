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
#include "hetsched/kernels/iwpp.hpp"

#include <deque>
#include <random>
#include <stdexcept>

#include "hetsched/common.hpp"

namespace hetsched {

long long iwpp_run(Grid2D& grid, std::vector<int> seeds, Monotone dir, Connectivity conn,
                   const PropagateFn& candidate, const IwppOptions& options) {
  for (int s : seeds) {
    if (s < 0 || s >= grid.size()) throw ConfigError("wavefront seed out of range");
  }
  const auto& offsets = neighbor_offsets(conn);
  std::deque<int> queue(seeds.begin(), seeds.end());
  std::mt19937_64 gen(options.shuffle_seed);
  long long updates = 0;

  while (!queue.empty()) {
    int p;
    switch (options.order) {
      case WavefrontOrder::Fifo:
        p = queue.front();
        queue.pop_front();
        break;
      case WavefrontOrder::Lifo:
        p = queue.back();
        queue.pop_back();
        break;
      case WavefrontOrder::Shuffled: {
        const auto pick = static_cast<std::size_t>(uniform_unit(gen) * queue.size());
        const auto at = pick >= queue.size() ? queue.size() - 1 : pick;
        p = queue[at];
        queue[at] = queue.back();
        queue.pop_back();
        break;
      }
      default: throw std::logic_error("unknown wavefront order");
    }

    const int px = p % grid.width;
    const int py = p / grid.width;
    const std::int32_t src = grid[p];
    for (const auto& [dx, dy] : offsets) {
      const int qx = px + dx;
      const int qy = py + dy;
      if (!grid.in_bounds(qx, qy)) continue;
      const int q = grid.index(qx, qy);
      const std::int32_t cur = grid[q];
      const std::optional<std::int32_t> cand = candidate(src, cur, q);
      if (!cand || *cand == cur) continue;
      const bool forward = dir == Monotone::NonDecreasing ? *cand > cur : *cand < cur;
      if (!forward) throw std::logic_error("propagation moved a value against its direction");
      grid[q] = *cand;
      queue.push_back(q);
      ++updates;
    }
  }
  return updates;
}

}  // namespace hetsched
