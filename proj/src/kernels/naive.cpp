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
#include "hetsched/kernels/naive.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "hetsched/common.hpp"

namespace hetsched {

Grid2D naive_reconstruct(const Grid2D& marker, const Grid2D& mask, Connectivity conn) {
  if (marker.width != mask.width || marker.height != mask.height) {
    throw ConfigError("marker and mask dimensions differ");
  }
  if (marker.width <= 0 || marker.height <= 0) throw ConfigError("grids must be non-empty");
  const auto& offsets = neighbor_offsets(conn);
  Grid2D J(marker.width, marker.height);
  for (int i = 0; i < J.size(); ++i) J[i] = std::min(marker[i], mask[i]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < J.height; ++y) {
      for (int x = 0; x < J.width; ++x) {
        std::int32_t v = J.at(x, y);
        for (const auto& [dx, dy] : offsets) {
          if (J.in_bounds(x + dx, y + dy)) v = std::max(v, J.at(x + dx, y + dy));
        }
        v = std::min(v, mask.at(x, y));
        if (v != J.at(x, y)) {
          J.at(x, y) = v;
          changed = true;
        }
      }
    }
  }
  return J;
}

Grid2D naive_fill_holes(const Grid2D& img, Connectivity conn, std::int32_t max_value) {
  if (img.width <= 0 || img.height <= 0) throw ConfigError("grids must be non-empty");
  for (std::int32_t v : img.data) {
    if (v != 0 && v != max_value) throw ConfigError("input must be binary 0/max_value");
  }
  const auto& offsets = neighbor_offsets(conn);
  std::vector<char> outside(static_cast<std::size_t>(img.size()), 0);
  std::deque<int> queue;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const bool border = x == 0 || y == 0 || x == img.width - 1 || y == img.height - 1;
      if (border && img.at(x, y) == 0) {
        outside[static_cast<std::size_t>(img.index(x, y))] = 1;
        queue.push_back(img.index(x, y));
      }
    }
  }
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    const int px = p % img.width;
    const int py = p / img.width;
    for (const auto& [dx, dy] : offsets) {
      if (!img.in_bounds(px + dx, py + dy)) continue;
      const int q = img.index(px + dx, py + dy);
      if (img[q] == 0 && !outside[static_cast<std::size_t>(q)]) {
        outside[static_cast<std::size_t>(q)] = 1;
        queue.push_back(q);
      }
    }
  }
  Grid2D out = img;
  for (int i = 0; i < img.size(); ++i) {
    if (img[i] == 0 && !outside[static_cast<std::size_t>(i)]) out[i] = max_value;
  }
  return out;
}

Grid2D naive_distance(const Grid2D& binary, Connectivity conn) {
  if (binary.width <= 0 || binary.height <= 0) throw ConfigError("grids must be non-empty");
  bool any_zero = false;
  for (std::int32_t v : binary.data) any_zero = any_zero || v == 0;
  if (!any_zero) throw ConfigError("distance transform needs at least one zero pixel");

  Grid2D dist(binary.width, binary.height, 0);
  for (int y = 0; y < binary.height; ++y) {
    for (int x = 0; x < binary.width; ++x) {
      if (binary.at(x, y) == 0) continue;
      std::int32_t best = std::numeric_limits<std::int32_t>::max();
      for (int zy = 0; zy < binary.height; ++zy) {
        for (int zx = 0; zx < binary.width; ++zx) {
          if (binary.at(zx, zy) != 0) continue;
          const int ax = std::abs(zx - x);
          const int ay = std::abs(zy - y);
          const int d = conn == Connectivity::Eight ? std::max(ax, ay) : ax + ay;
          best = std::min(best, d);
        }
      }
      dist.at(x, y) = best;
    }
  }
  return dist;
}

Grid2D naive_ccl(const Grid2D& binary, Connectivity conn) {
  if (binary.width <= 0 || binary.height <= 0) throw ConfigError("grids must be non-empty");
  const auto& offsets = neighbor_offsets(conn);
  Grid2D labels(binary.width, binary.height, 0);
  for (int start = 0; start < binary.size(); ++start) {
    if (binary[start] == 0 || labels[start] != 0) continue;
    const std::int32_t label = start + 1;
    labels[start] = label;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop_front();
      const int px = p % binary.width;
      const int py = p / binary.width;
      for (const auto& [dx, dy] : offsets) {
        if (!binary.in_bounds(px + dx, py + dy)) continue;
        const int q = binary.index(px + dx, py + dy);
        if (binary[q] != 0 && labels[q] == 0) {
          labels[q] = label;
          queue.push_back(q);
        }
      }
    }
  }
  return labels;
}

Grid2D naive_area(const Grid2D& binary, int min_area, int max_area, Connectivity conn) {
  if (min_area < 1 || min_area > max_area) {
    throw std::invalid_argument("area threshold needs 1 <= min_area <= max_area");
  }
  const Grid2D labels = naive_ccl(binary, conn);
  std::unordered_map<std::int32_t, int> count;
  for (int i = 0; i < binary.size(); ++i) {
    if (labels[i] != 0) ++count[labels[i]];
  }
  Grid2D out(binary.width, binary.height, 0);
  for (int i = 0; i < binary.size(); ++i) {
    if (labels[i] == 0) continue;
    const int n = count[labels[i]];
    if (n >= min_area && n <= max_area) out[i] = binary[i];
  }
  return out;
}

}  // namespace hetsched
