// Copyright (c) 2026 The numex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NUMEX_CONFIG_H_
#define NUMEX_CONFIG_H_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace numex {

// Flat `key = value` configuration. Blank lines and lines starting with '#'
// are ignored; later keys override earlier ones.
class Config {
 public:
  static Config Parse(std::istream& in);
  static Config Load(const std::string& path);

  std::optional<std::string> Get(const std::string& key) const;
  std::string GetOr(const std::string& key, const std::string& fallback) const;
  int GetInt(const std::string& key, int fallback) const;
  double GetDouble(const std::string& key, double fallback) const;
  // Comma separated, entries trimmed, empty entries dropped.
  std::vector<std::string> GetList(const std::string& key) const;
  // Keys beginning with `prefix`, in sorted order.
  std::vector<std::string> KeysWithPrefix(const std::string& prefix) const;

  void Set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }

 private:
  std::map<std::string, std::string> values_;
};

std::string Trim(const std::string& text);

}  // namespace numex

#endif  // NUMEX_CONFIG_H_
