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
#include "hetsched/kernels/morphology.hpp"

#include <algorithm>

#include "hetsched/common.hpp"
#include "hetsched/kernels/iwpp.hpp"

#ifdef HETSCHED_HAVE_OPENMP
#include <omp.h>
#endif

namespace hetsched {
namespace {

// Raster-order halves of the neighborhood: already-visited neighbors for a
// top-down left-right scan, and the mirror set for the bottom-up scan.
const std::vector<std::pair<int, int>>& upper_half(Connectivity conn) {
  static const std::vector<std::pair<int, int>> four = {{0, -1}, {-1, 0}};
  static const std::vector<std::pair<int, int>> eight = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}};
  return conn == Connectivity::Four ? four : eight;
}

const std::vector<std::pair<int, int>>& lower_half(Connectivity conn) {
  static const std::vector<std::pair<int, int>> four = {{1, 0}, {0, 1}};
  static const std::vector<std::pair<int, int>> eight = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
  return conn == Connectivity::Four ? four : eight;
}

void check_pair(const Grid2D& marker, const Grid2D& mask) {
  if (marker.width != mask.width || marker.height != mask.height) {
    throw ConfigError("marker and mask dimensions differ");
  }
  if (marker.width <= 0 || marker.height <= 0) throw ConfigError("grids must be non-empty");
}

Grid2D reconstruct_serial(const Grid2D& marker, const Grid2D& mask, Connectivity conn) {
  Grid2D J(marker.width, marker.height);
  for (int i = 0; i < J.size(); ++i) J[i] = std::min(marker[i], mask[i]);

  const auto& up = upper_half(conn);
  const auto& down = lower_half(conn);
  for (int y = 0; y < J.height; ++y) {
    for (int x = 0; x < J.width; ++x) {
      std::int32_t v = J.at(x, y);
      for (const auto& [dx, dy] : up) {
        if (J.in_bounds(x + dx, y + dy)) v = std::max(v, J.at(x + dx, y + dy));
      }
      J.at(x, y) = std::min(v, mask.at(x, y));
    }
  }

  std::vector<int> seeds;
  for (int y = J.height - 1; y >= 0; --y) {
    for (int x = J.width - 1; x >= 0; --x) {
      std::int32_t v = J.at(x, y);
      for (const auto& [dx, dy] : down) {
        if (J.in_bounds(x + dx, y + dy)) v = std::max(v, J.at(x + dx, y + dy));
      }
      v = std::min(v, mask.at(x, y));
      J.at(x, y) = v;
      for (const auto& [dx, dy] : down) {
        if (!J.in_bounds(x + dx, y + dy)) continue;
        const int q = J.index(x + dx, y + dy);
        if (J[q] < v && J[q] < mask[q]) {
          seeds.push_back(J.index(x, y));
          break;
        }
      }
    }
  }

  iwpp_run(J, std::move(seeds), Monotone::NonDecreasing, conn,
           [&mask](std::int32_t src, std::int32_t dst, int q) -> std::optional<std::int32_t> {
             const std::int32_t v = std::min(src, mask[q]);
             return v > dst ? std::optional<std::int32_t>(v) : std::nullopt;
           });
  return J;
}

#ifdef HETSCHED_HAVE_OPENMP
// Banded sweep rounds: each thread sweeps its own rows, reading the
// round-start snapshot for rows outside its band.  Updates only raise
// values toward the mask, so rounds converge to the same unique fixpoint
// the serial pass computes.
Grid2D reconstruct_parallel(const Grid2D& marker, const Grid2D& mask, Connectivity conn,
                            int threads) {
  Grid2D J(marker.width, marker.height);
  for (int i = 0; i < J.size(); ++i) J[i] = std::min(marker[i], mask[i]);

  const auto& up = upper_half(conn);
  const auto& down = lower_half(conn);
  const int h = J.height;
  Grid2D snapshot;
  bool changed = true;
  while (changed) {
    snapshot = J;
    #pragma omp parallel num_threads(threads)
    {
      const int nt = omp_get_num_threads();
      const int tid = omp_get_thread_num();
      const int y0 = static_cast<int>(static_cast<long long>(h) * tid / nt);
      const int y1 = static_cast<int>(static_cast<long long>(h) * (tid + 1) / nt);
      auto read = [&](int x, int y) {
        return (y >= y0 && y < y1) ? J.at(x, y) : snapshot.at(x, y);
      };
      for (int y = y0; y < y1; ++y) {
        for (int x = 0; x < J.width; ++x) {
          std::int32_t v = J.at(x, y);
          for (const auto& [dx, dy] : up) {
            if (J.in_bounds(x + dx, y + dy)) v = std::max(v, read(x + dx, y + dy));
          }
          J.at(x, y) = std::min(v, mask.at(x, y));
        }
      }
      for (int y = y1 - 1; y >= y0; --y) {
        for (int x = J.width - 1; x >= 0; --x) {
          std::int32_t v = J.at(x, y);
          for (const auto& [dx, dy] : down) {
            if (J.in_bounds(x + dx, y + dy)) v = std::max(v, read(x + dx, y + dy));
          }
          J.at(x, y) = std::min(v, mask.at(x, y));
        }
      }
    }
    changed = !(J.data == snapshot.data);
  }
  return J;
}
#endif

}  // namespace

Grid2D morph_reconstruct(const Grid2D& marker, const Grid2D& mask, Connectivity conn,
                         int threads) {
  check_pair(marker, mask);
#ifdef HETSCHED_HAVE_OPENMP
  if (threads > 1) return reconstruct_parallel(marker, mask, conn, threads);
#endif
  return reconstruct_serial(marker, mask, conn);
}

Grid2D fill_holes(const Grid2D& img, Connectivity conn, int threads, std::int32_t max_value) {
  if (img.width <= 0 || img.height <= 0) throw ConfigError("grids must be non-empty");
  for (std::int32_t v : img.data) {
    if (v < 0 || v > max_value) throw ConfigError("pixel values must lie in [0, max_value]");
  }
  Grid2D mask(img.width, img.height);
  for (int i = 0; i < img.size(); ++i) mask[i] = max_value - img[i];
  Grid2D marker(img.width, img.height, 0);
  for (int x = 0; x < img.width; ++x) {
    marker.at(x, 0) = mask.at(x, 0);
    marker.at(x, img.height - 1) = mask.at(x, img.height - 1);
  }
  for (int y = 0; y < img.height; ++y) {
    marker.at(0, y) = mask.at(0, y);
    marker.at(img.width - 1, y) = mask.at(img.width - 1, y);
  }
  Grid2D rec = morph_reconstruct(marker, mask, conn, threads);
  Grid2D out(img.width, img.height);
  for (int i = 0; i < img.size(); ++i) out[i] = max_value - rec[i];
  return out;
}

}  // namespace hetsched
