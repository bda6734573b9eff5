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
#include <istream>
#include <string>
#include <vector>

namespace hetsched {

// Line-oriented "name key=value ..." configuration text.  Used by the
// profile, pipeline-template, cluster and experiment files.  '#' starts a
// comment; blank lines are ignored.  All parse errors raise ConfigError with
// the source name, the 1-based line and, where relevant, the key.

struct ConfigEntry {
  int line = 0;
  std::string name;  // first token on the line
  std::vector<std::pair<std::string, std::string>> values;  // key=value pairs

  bool has(const std::string& key) const;
  // Throw ConfigError naming line and key when absent or non-numeric.
  std::string get(const std::string& source, const std::string& key) const;
  double get_double(const std::string& source, const std::string& key) const;
  std::int64_t get_int(const std::string& source, const std::string& key) const;
};

std::vector<ConfigEntry> parse_config_text(std::istream& in, const std::string& source);
std::vector<ConfigEntry> load_config_text(const std::filesystem::path& path);

}  // namespace hetsched
