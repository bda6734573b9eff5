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
#include <functional>
#include <optional>
#include <vector>

#include "hetsched/kernels/grid.hpp"

namespace hetsched {

// Direction grid values are allowed to move during propagation.
enum class Monotone : int { NonDecreasing, NonIncreasing };

// Order elements leave the wavefront.  The fixpoint of a monotone
// propagation is order-independent; exercising different orders is how
// that property gets tested.
enum class WavefrontOrder : int { Fifo, Lifo, Shuffled };

struct IwppOptions {
  WavefrontOrder order = WavefrontOrder::Fifo;
  std::uint64_t shuffle_seed = 0;
};

// Candidate value for dst_idx given the current values of a wavefront
// element and of dst_idx itself; std::nullopt means no update.
using PropagateFn =
    std::function<std::optional<std::int32_t>(std::int32_t src_value, std::int32_t dst_value,
                                              int dst_idx)>;

// Irregular wavefront propagation: starting from the seed elements, each
// popped element offers candidates to its neighbors; accepted candidates
// overwrite the neighbor and push it onto the wavefront, until the
// wavefront drains.  Candidates must move values strictly in the declared
// direction; one that moves against it throws std::logic_error.  Returns
// the number of updates applied.
long long iwpp_run(Grid2D& grid, std::vector<int> seeds, Monotone dir, Connectivity conn,
                   const PropagateFn& candidate, const IwppOptions& options = {});

}  // namespace hetsched
