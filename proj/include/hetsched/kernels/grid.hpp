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
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace hetsched {

enum class Connectivity : int { Four = 4, Eight = 8 };

// Row-major 2D grid of 32-bit values; (x, y) maps to index y * width + x.
struct Grid2D {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> data;

  Grid2D() = default;
  Grid2D(int w, int h, std::int32_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  int size() const { return width * height; }
  int index(int x, int y) const { return y * width + x; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  std::int32_t& at(int x, int y) { return data[static_cast<std::size_t>(index(x, y))]; }
  std::int32_t at(int x, int y) const { return data[static_cast<std::size_t>(index(x, y))]; }
  std::int32_t& operator[](int idx) { return data[static_cast<std::size_t>(idx)]; }
  std::int32_t operator[](int idx) const { return data[static_cast<std::size_t>(idx)]; }

  bool operator==(const Grid2D& other) const = default;
};

// Neighbor offsets as (dx, dy) pairs: 4 edge neighbors, or 8 including
// diagonals, in fixed scan order.
const std::vector<std::pair<int, int>>& neighbor_offsets(Connectivity conn);

// Uniform random grids for tests and kernel validation; identical
// (dimensions, parameters, seed) give identical grids.
Grid2D random_binary_grid(int width, int height, double fg_prob, std::uint64_t seed,
                          std::int32_t fg_value = 255);
Grid2D random_gray_grid(int width, int height, std::int32_t max_value, std::uint64_t seed);

// Plain-text PGM (P2).  read_pgm throws ConfigError on malformed input.
Grid2D read_pgm(std::istream& in, const std::string& source);
Grid2D load_pgm(const std::filesystem::path& path);
void write_pgm(const Grid2D& grid, std::ostream& out, std::int32_t max_value = 255);

}  // namespace hetsched
