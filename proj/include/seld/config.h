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

#ifndef SELD_CONFIG_H_
#define SELD_CONFIG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seld {

// Flat `key = value` settings. Lines starting with '#' are comments and
// `include <path>` splices another file (relative to the including file);
// later assignments override earlier ones.
class KeyValueConfig {
 public:
  static KeyValueConfig Load(const std::filesystem::path& path);
  static KeyValueConfig Parse(std::string_view text,
                              const std::filesystem::path& base_dir = ".");

  bool Has(const std::string& key) const { return values_.count(key) > 0; }
  void Set(const std::string& key, std::string value) { values_[key] = std::move(value); }

  std::optional<std::string> Find(const std::string& key) const;
  std::string GetString(const std::string& key, const std::string& fallback) const;
  double GetDouble(const std::string& key, double fallback) const;
  int GetInt(const std::string& key, int fallback) const;
  bool GetBool(const std::string& key, bool fallback) const;
  // Comma-separated list of doubles.
  std::vector<double> GetDoubleList(const std::string& key) const;

  // Overlays `other` on top of this config.
  void Merge(const KeyValueConfig& other);

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  void ParseInto(std::string_view text, const std::filesystem::path& base_dir, int depth);

  std::map<std::string, std::string> values_;
};

}  // namespace seld

#endif  // SELD_CONFIG_H_
