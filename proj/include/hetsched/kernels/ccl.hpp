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

#include "hetsched/kernels/grid.hpp"

namespace hetsched {

// Union-find with the smaller element as root, so a set's representative
// is always its minimum member regardless of union order.
class DisjointSetForest {
public:
  explicit DisjointSetForest(int n) : parent_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int find(int i) {
    while (parent_[static_cast<std::size_t>(i)] != i) {
      parent_[static_cast<std::size_t>(i)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(i)])];
      i = parent_[static_cast<std::size_t>(i)];
    }
    return i;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[static_cast<std::size_t>(b)] = a;
    } else {
      parent_[static_cast<std::size_t>(a)] = b;
    }
  }

  int size() const { return static_cast<int>(parent_.size()); }

private:
  std::vector<std::int32_t> parent_;
};

// Connected-component labels of the nonzero pixels: zero pixels keep label
// 0, and every component is labeled with the smallest row-major index of
// its pixels plus one.  The +1 keeps the component at index 0 distinct
// from the background.  Labels are therefore independent of traversal and
// merge order.  threads > 1 unions in-band edges per row band in parallel
// and then merges band-crossing edges.
Grid2D connected_components(const Grid2D& binary, Connectivity conn = Connectivity::Eight,
                            int threads = 1);

}  // namespace hetsched
