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

// Grid distance to the nearest zero pixel: zero pixels map to 0, nonzero
// pixels to their hop count under the connectivity (chessboard distance
// for Eight, city-block for Four).  Throws ConfigError when the grid has
// no zero pixel.  threads <= 1 runs wavefront propagation from the zero
// set; threads > 1 runs level-synchronous rounds under OpenMP when
// available.  Both produce the unique distance map.
Grid2D distance_transform(const Grid2D& binary, Connectivity conn = Connectivity::Eight,
                          int threads = 1);

}  // namespace hetsched
