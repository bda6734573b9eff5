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
#include <benchmark/benchmark.h>

#include "hetsched/kernels/area.hpp"
#include "hetsched/kernels/ccl.hpp"
#include "hetsched/kernels/distance.hpp"
#include "hetsched/kernels/grid.hpp"
#include "hetsched/kernels/morphology.hpp"

namespace {

using hetsched::Connectivity;
using hetsched::Grid2D;

// Side length and thread count come in as {size, threads}; threads == 1 is
// the serial reference path the parallel kernels are checked against.
void args_grid(benchmark::internal::Benchmark* b) {
  for (int size : {128, 256}) {
    for (int threads : {1, 2, 4}) b->Args({size, threads});
  }
}

void BM_Reconstruct(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const Grid2D marker = hetsched::random_gray_grid(size, size, 255, 7);
  const Grid2D mask = hetsched::random_gray_grid(size, size, 255, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hetsched::morph_reconstruct(marker, mask, Connectivity::Eight, threads));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_Reconstruct)->Apply(args_grid)->Unit(benchmark::kMillisecond);

void BM_FillHoles(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const Grid2D img = hetsched::random_binary_grid(size, size, 0.5, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsched::fill_holes(img, Connectivity::Eight, threads));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_FillHoles)->Apply(args_grid)->Unit(benchmark::kMillisecond);

void BM_DistanceTransform(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  Grid2D img = hetsched::random_binary_grid(size, size, 0.95, 13);
  img[0] = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsched::distance_transform(img, Connectivity::Eight, threads));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_DistanceTransform)->Apply(args_grid)->Unit(benchmark::kMillisecond);

void BM_ConnectedComponents(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const Grid2D img = hetsched::random_binary_grid(size, size, 0.6, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsched::connected_components(img, Connectivity::Eight, threads));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_ConnectedComponents)->Apply(args_grid)->Unit(benchmark::kMillisecond);

void BM_AreaThreshold(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const Grid2D img = hetsched::random_binary_grid(size, size, 0.6, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hetsched::area_threshold(img, 4, size * size / 4, Connectivity::Eight, threads));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_AreaThreshold)->Apply(args_grid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
