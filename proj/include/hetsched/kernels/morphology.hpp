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

// Reconstruction by dilation: the smallest grid J >= min(marker, mask)
// with J <= mask that is stable under neighborhood dilation.  The result
// is a unique fixpoint, so every execution order, including the parallel
// banded one, produces identical output.  threads <= 1 runs the serial
// two-sweep-plus-wavefront reference; threads > 1 runs banded sweep
// rounds under OpenMP when available.
Grid2D morph_reconstruct(const Grid2D& marker, const Grid2D& mask,
                         Connectivity conn = Connectivity::Eight, int threads = 1);

// Fills regions of low values not reachable from the border: the output is
// max_value minus the reconstruction of the inverted image from its border
// values.  conn applies to the background propagation.  Values must lie in
// [0, max_value].
Grid2D fill_holes(const Grid2D& img, Connectivity conn = Connectivity::Eight, int threads = 1,
                  std::int32_t max_value = 255);

}  // namespace hetsched
