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

#include "hetsched/kernels/grid.hpp"

namespace hetsched {

// Keeps connected components whose pixel count lies in [min_area,
// max_area] and zeroes the rest; surviving pixels keep their input value.
// Requires 1 <= min_area <= max_area, else std::invalid_argument.
Grid2D area_threshold(const Grid2D& binary, int min_area, int max_area,
                      Connectivity conn = Connectivity::Eight, int threads = 1);

}  // namespace hetsched
