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
#include "hetsched/kernels/ccl.hpp"

#include "hetsched/common.hpp"

#ifdef HETSCHED_HAVE_OPENMP
#include <omp.h>
#endif

namespace hetsched {
namespace {

// Neighbors at smaller row-major indices; each adjacency is united once.
const std::vector<std::pair<int, int>>& prior_neighbors(Connectivity conn) {
  static const std::vector<std::pair<int, int>> four = {{0, -1}, {-1, 0}};
  static const std::vector<std::pair<int, int>> eight = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}};
  return conn == Connectivity::Four ? four : eight;
}

void unite_rows(const Grid2D& g, DisjointSetForest& dsf, Connectivity conn, int y_begin,
                int y_end, int y_floor) {
  const auto& prior = prior_neighbors(conn);
  for (int y = y_begin; y < y_end; ++y) {
    for (int x = 0; x < g.width; ++x) {
      if (g.at(x, y) == 0) continue;
      for (const auto& [dx, dy] : prior) {
        const int nx = x + dx;
        const int ny = y + dy;
        if (ny < y_floor || !g.in_bounds(nx, ny) || g.at(nx, ny) == 0) continue;
        dsf.unite(g.index(x, y), g.index(nx, ny));
      }
    }
  }
}

}  // namespace

Grid2D connected_components(const Grid2D& binary, Connectivity conn, int threads) {
  if (binary.width <= 0 || binary.height <= 0) throw ConfigError("grids must be non-empty");
  DisjointSetForest dsf(binary.size());
  const int h = binary.height;

#ifdef HETSCHED_HAVE_OPENMP
  if (threads > 1) {
    // Bands touch disjoint index ranges while y_floor keeps every union
    // inside its own band, so the shared forest needs no locking here.
    int nt_used = 1;
    #pragma omp parallel num_threads(threads)
    {
      const int nt = omp_get_num_threads();
      const int tid = omp_get_thread_num();
      #pragma omp single
      nt_used = nt;
      const int y0 = static_cast<int>(static_cast<long long>(h) * tid / nt);
      const int y1 = static_cast<int>(static_cast<long long>(h) * (tid + 1) / nt);
      unite_rows(binary, dsf, conn, y0, y1, y0);
    }
    // Band-crossing adjacencies, merged serially.
    for (int tid = 1; tid < nt_used; ++tid) {
      const int y0 = static_cast<int>(static_cast<long long>(h) * tid / nt_used);
      if (y0 <= 0 || y0 >= h) continue;
      unite_rows(binary, dsf, conn, y0, y0 + 1, 0);
    }
  } else {
    unite_rows(binary, dsf, conn, 0, h, 0);
  }
#else
  (void)threads;
  unite_rows(binary, dsf, conn, 0, h, 0);
#endif

  Grid2D labels(binary.width, binary.height, 0);
  for (int i = 0; i < binary.size(); ++i) {
    if (binary[i] != 0) labels[i] = dsf.find(i) + 1;
  }
  return labels;
}

}  // namespace hetsched
