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
#include "hetsched/config_text.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hetsched/common.hpp"

namespace hetsched {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
  std::ostringstream os;
  os << source << ":" << line << ": " << msg;
  throw ConfigError(os.str());
}

}  // namespace

bool ConfigEntry::has(const std::string& key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return true;
  }
  return false;
}

std::string ConfigEntry::get(const std::string& source, const std::string& key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  fail(source, line, "missing key '" + key + "' for entry '" + name + "'");
}

double ConfigEntry::get_double(const std::string& source, const std::string& key) const {
  const std::string raw = get(source, key);
  char* end = nullptr;
  const double v = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() || *end != '\0') {
    fail(source, line, "key '" + key + "' has non-numeric value '" + raw + "'");
  }
  return v;
}

std::int64_t ConfigEntry::get_int(const std::string& source, const std::string& key) const {
  const std::string raw = get(source, key);
  char* end = nullptr;
  const long long v = std::strtoll(raw.c_str(), &end, 10);
  if (end == raw.c_str() || *end != '\0') {
    fail(source, line, "key '" + key + "' has non-integer value '" + raw + "'");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<ConfigEntry> parse_config_text(std::istream& in, const std::string& source) {
  std::vector<ConfigEntry> entries;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    ConfigEntry entry;
    entry.line = line_no;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) {
        if (!entry.name.empty()) {
          fail(source, line_no, "unexpected bare token '" + tok + "' after entry name '" + entry.name + "'");
        }
        entry.name = tok;
      } else {
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key.empty()) fail(source, line_no, "empty key in token '" + tok + "'");
        if (value.empty()) fail(source, line_no, "key '" + key + "' has empty value");
        if (entry.has(key)) fail(source, line_no, "duplicate key '" + key + "'");
        entry.values.emplace_back(key, value);
      }
    }
    if (entry.name.empty()) {
      // Key-value-only lines (e.g. experiment files) keep an empty name.
      if (entry.values.empty()) continue;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ConfigEntry> load_config_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_config_text(in, path.filename().string());
}

}  // namespace hetsched
