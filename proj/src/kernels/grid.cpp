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
#include "hetsched/kernels/grid.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "hetsched/common.hpp"

namespace hetsched {

const std::vector<std::pair<int, int>>& neighbor_offsets(Connectivity conn) {
  static const std::vector<std::pair<int, int>> four = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
  static const std::vector<std::pair<int, int>> eight = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                                         {1, 0},  {-1, 1}, {0, 1},  {1, 1}};
  return conn == Connectivity::Four ? four : eight;
}

Grid2D random_binary_grid(int width, int height, double fg_prob, std::uint64_t seed,
                          std::int32_t fg_value) {
  if (width <= 0 || height <= 0) throw ConfigError("grid dimensions must be positive");
  if (fg_prob < 0.0 || fg_prob > 1.0) throw ConfigError("foreground probability must be in [0,1]");
  Grid2D grid(width, height);
  std::mt19937_64 gen(seed);
  for (std::int32_t& v : grid.data) v = uniform_unit(gen) < fg_prob ? fg_value : 0;
  return grid;
}

Grid2D random_gray_grid(int width, int height, std::int32_t max_value, std::uint64_t seed) {
  if (width <= 0 || height <= 0) throw ConfigError("grid dimensions must be positive");
  if (max_value < 0) throw ConfigError("gray levels must be non-negative");
  Grid2D grid(width, height);
  std::mt19937_64 gen(seed);
  for (std::int32_t& v : grid.data) {
    v = static_cast<std::int32_t>(uniform_unit(gen) * (max_value + 1));
    if (v > max_value) v = max_value;
  }
  return grid;
}

Grid2D read_pgm(std::istream& in, const std::string& source) {
  auto fail = [&source](const std::string& what) -> ConfigError {
    return ConfigError(source + ": " + what);
  };
  // Token stream with '#' comments stripped, as the P2 format specifies.
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty() || tokens[0] != "P2") throw fail("expected plain PGM magic P2");
  if (tokens.size() < 4) throw fail("truncated PGM header");
  int width = 0, height = 0;
  long long maxval = 0;
  try {
    width = std::stoi(tokens[1]);
    height = std::stoi(tokens[2]);
    maxval = std::stoll(tokens[3]);
  } catch (const std::exception&) {
    throw fail("malformed PGM header");
  }
  if (width <= 0 || height <= 0 || maxval <= 0) throw fail("PGM header values must be positive");
  const std::size_t expect = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (tokens.size() != 4 + expect) {
    throw fail("expected " + std::to_string(expect) + " pixels, got " +
               std::to_string(tokens.size() - 4));
  }
  Grid2D grid(width, height);
  for (std::size_t i = 0; i < expect; ++i) {
    long long v = 0;
    try {
      v = std::stoll(tokens[4 + i]);
    } catch (const std::exception&) {
      throw fail("malformed pixel value '" + tokens[4 + i] + "'");
    }
    if (v < 0 || v > maxval) throw fail("pixel value out of range");
    grid.data[i] = static_cast<std::int32_t>(v);
  }
  return grid;
}

Grid2D load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return read_pgm(in, path.string());
}

void write_pgm(const Grid2D& grid, std::ostream& out, std::int32_t max_value) {
  out << "P2\n" << grid.width << ' ' << grid.height << '\n' << max_value << '\n';
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      out << grid.at(x, y) << (x + 1 == grid.width ? '\n' : ' ');
    }
  }
}

}  // namespace hetsched
