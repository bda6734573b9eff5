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
#include "hetsched/kernels/validate.hpp"

#include <random>
#include <string>

#include "hetsched/common.hpp"
#include "hetsched/kernels/area.hpp"
#include "hetsched/kernels/ccl.hpp"
#include "hetsched/kernels/distance.hpp"
#include "hetsched/kernels/grid.hpp"
#include "hetsched/kernels/morphology.hpp"
#include "hetsched/kernels/naive.hpp"

namespace hetsched {
namespace {

void expect_equal(const Grid2D& got, const Grid2D& want, const char* kernel,
                  std::uint64_t grid_seed, int threads) {
  if (got == want) return;
  int where = -1;
  for (int i = 0; i < want.size() && where < 0; ++i) {
    if (got[i] != want[i]) where = i;
  }
  throw KernelMismatch(std::string(kernel) + " diverged from its reference at index " +
                       std::to_string(where) + " (grid seed " + std::to_string(grid_seed) +
                       ", threads " + std::to_string(threads) + ")");
}

}  // namespace

KernelValidationStats validate_kernels(const KernelValidationOptions& options) {
  if (options.grids < 1) throw ConfigError("validation needs at least one grid");
  if (options.min_size < 2 || options.min_size > options.max_size) {
    throw ConfigError("validation needs 2 <= min_size <= max_size");
  }
  if (options.thread_counts.empty()) throw ConfigError("validation needs a thread count");

  KernelValidationStats stats;
  std::mt19937_64 gen(options.seed);
  for (int g = 0; g < options.grids; ++g) {
    const int span = options.max_size - options.min_size + 1;
    const int w = options.min_size + static_cast<int>(uniform_unit(gen) * span) % span;
    const int h = options.min_size + static_cast<int>(uniform_unit(gen) * span) % span;
    const double fg_prob = 0.3 + 0.4 * uniform_unit(gen);
    const std::uint64_t grid_seed = gen();
    const Connectivity conn = (g % 2 == 0) ? Connectivity::Eight : Connectivity::Four;

    Grid2D binary = random_binary_grid(w, h, fg_prob, grid_seed);
    // The distance transform is undefined without a zero pixel.
    binary[0] = 0;
    const Grid2D marker = random_gray_grid(w, h, 255, grid_seed + 1);
    const Grid2D mask = random_gray_grid(w, h, 255, grid_seed + 2);

    const Grid2D want_rec = naive_reconstruct(marker, mask, conn);
    const Grid2D want_fill = naive_fill_holes(binary, conn);
    const Grid2D want_dist = naive_distance(binary, conn);
    const Grid2D want_ccl = naive_ccl(binary, conn);
    const int max_area = std::max(1, w * h / 8);
    const Grid2D want_area = naive_area(binary, 2, max_area, conn);

    for (int threads : options.thread_counts) {
      expect_equal(morph_reconstruct(marker, mask, conn, threads), want_rec, "morph_reconstruct",
                   grid_seed, threads);
      expect_equal(fill_holes(binary, conn, threads), want_fill, "fill_holes", grid_seed,
                   threads);
      expect_equal(distance_transform(binary, conn, threads), want_dist, "distance_transform",
                   grid_seed, threads);
      expect_equal(connected_components(binary, conn, threads), want_ccl,
                   "connected_components", grid_seed, threads);
      expect_equal(area_threshold(binary, 2, max_area, conn, threads), want_area,
                   "area_threshold", grid_seed, threads);
      stats.comparisons += 5;
    }
    ++stats.grids;
  }
  return stats;
}

}  // namespace hetsched
