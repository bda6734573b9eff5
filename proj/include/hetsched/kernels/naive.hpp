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

// Deliberately simple reference computations, written independently of the
// production kernels so disagreements point at real defects.  All run in
// quadratic-or-worse time; keep inputs small.

// Repeats full-neighborhood dilation capped by the mask until nothing
// changes.
Grid2D naive_reconstruct(const Grid2D& marker, const Grid2D& mask,
                         Connectivity conn = Connectivity::Eight);

// Breadth-first flood of the zero pixels reachable from the border; every
// unreached zero pixel becomes max_value.  Input pixels must be 0 or
// max_value.
Grid2D naive_fill_holes(const Grid2D& img, Connectivity conn = Connectivity::Eight,
                        std::int32_t max_value = 255);

// Per-pixel minimum over all zero pixels of the exact metric distance
// (chessboard for Eight, city-block for Four).
Grid2D naive_distance(const Grid2D& binary, Connectivity conn = Connectivity::Eight);

// Row-major scan with breadth-first component collection; the first pixel
// a scan meets is the component minimum, which plus one becomes the label.
Grid2D naive_ccl(const Grid2D& binary, Connectivity conn = Connectivity::Eight);

// naive_ccl plus a recount pass and size filter.
Grid2D naive_area(const Grid2D& binary, int min_area, int max_area,
                  Connectivity conn = Connectivity::Eight);

}  // namespace hetsched
