/* Copyright 2026 The seldkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "seld/config.h"

#include <charconv>

#include "seld/binary_io.h"
#include "seld/errors.h"

namespace seld {
namespace {

constexpr int kMaxIncludeDepth = 16;

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double ToDouble(const std::string& key, const std::string& text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("config key '" + key + "': not a number: '" + text + "'");
  }
  return v;
}

}  // namespace

KeyValueConfig KeyValueConfig::Load(const std::filesystem::path& path) {
  KeyValueConfig cfg;
  cfg.ParseInto(ReadFileBytes(path), path.parent_path(), 0);
  return cfg;
}

KeyValueConfig KeyValueConfig::Parse(std::string_view text, const std::filesystem::path& base_dir) {
  KeyValueConfig cfg;
  cfg.ParseInto(text, base_dir, 0);
  return cfg;
}

void KeyValueConfig::ParseInto(std::string_view text, const std::filesystem::path& base_dir,
                               int depth) {
  if (depth > kMaxIncludeDepth) throw ValidationError("config include nesting too deep");
  int row = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    const std::string line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++row;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("include ", 0) == 0) {
      const std::filesystem::path inc = Trim(std::string_view(line).substr(8));
      const auto full = inc.is_absolute() ? inc : base_dir / inc;
      ParseInto(ReadFileBytes(full), full.parent_path(), depth + 1);
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", row);
    std::string key = Trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ParseError("empty key", row);
    values_[key] = Trim(std::string_view(line).substr(eq + 1));
  }
}

std::optional<std::string> KeyValueConfig::Find(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueConfig::GetString(const std::string& key, const std::string& fallback) const {
  return Find(key).value_or(fallback);
}

double KeyValueConfig::GetDouble(const std::string& key, double fallback) const {
  auto v = Find(key);
  return v ? ToDouble(key, *v) : fallback;
}

int KeyValueConfig::GetInt(const std::string& key, int fallback) const {
  auto v = Find(key);
  if (!v) return fallback;
  int out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw ValidationError("config key '" + key + "': not an integer: '" + *v + "'");
  }
  return out;
}

bool KeyValueConfig::GetBool(const std::string& key, bool fallback) const {
  auto v = Find(key);
  if (!v) return fallback;
  if (*v == "1" || *v == "true" || *v == "yes" || *v == "on") return true;
  if (*v == "0" || *v == "false" || *v == "no" || *v == "off") return false;
  throw ValidationError("config key '" + key + "': not a boolean: '" + *v + "'");
}

std::vector<double> KeyValueConfig::GetDoubleList(const std::string& key) const {
  std::vector<double> out;
  auto v = Find(key);
  if (!v) return out;
  std::string_view rest = *v;
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    const std::string item = Trim(rest.substr(0, comma));
    if (!item.empty()) out.push_back(ToDouble(key, item));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

void KeyValueConfig::Merge(const KeyValueConfig& other) {
  for (const auto& [k, v] : other.values_) values_[k] = v;
}

}  // namespace seld
