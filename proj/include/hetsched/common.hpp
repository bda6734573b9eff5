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
#include <random>
#include <stdexcept>
#include <string>

namespace hetsched {

using TaskId = std::int64_t;
using StageId = std::int64_t;

// Malformed profile, template, cluster or experiment input.  Messages carry
// the source name, line number and offending key where applicable.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The event queue drained while unfinished tasks remained.
class SimDeadlock : public std::runtime_error {
public:
  explicit SimDeadlock(const std::string& what) : std::runtime_error(what) {}
};

// A kernel output disagreed with its reference oracle.
class KernelMismatch : public std::runtime_error {
public:
  explicit KernelMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Uniform draw in [0,1) built from the top 53 bits of the generator output,
// identical on every platform (the standard distributions are not).
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(gen);
}

}  // namespace hetsched
