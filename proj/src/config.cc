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

#include "numex/config.h"

#include <fstream>
#include <sstream>

#include "numex/errors.h"

namespace numex {

std::string Trim(const std::string& text) {
  const char* ws = " \t\r\n";
  std::size_t b = text.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  std::size_t e = text.find_last_not_of(ws);
  return text.substr(b, e - b + 1);
}

Config Config::Parse(std::istream& in) {
  Config config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    std::string key = Trim(t.substr(0, eq));
    if (key.empty()) throw ParseError("empty key", line_no);
    config.values_[key] = Trim(t.substr(eq + 1));
  }
  return config;
}

Config Config::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  return Parse(in);
}

std::optional<std::string> Config::Get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Config::GetOr(const std::string& key,
                          const std::string& fallback) const {
  return Get(key).value_or(fallback);
}

int Config::GetInt(const std::string& key, int fallback) const {
  auto v = Get(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    int r = std::stoi(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return r;
  } catch (const std::exception&) {
    throw ParseError("key '" + key + "' is not an integer: " + *v);
  }
}

double Config::GetDouble(const std::string& key, double fallback) const {
  auto v = Get(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    double r = std::stod(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return r;
  } catch (const std::exception&) {
    throw ParseError("key '" + key + "' is not a number: " + *v);
  }
}

std::vector<std::string> Config::GetList(const std::string& key) const {
  std::vector<std::string> out;
  auto v = Get(key);
  if (!v) return out;
  std::stringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> Config::KeysWithPrefix(
    const std::string& prefix) const {
  std::vector<std::string> keys;
  for (auto it = values_.lower_bound(prefix);
       it != values_.end() && it->first.starts_with(prefix); ++it) {
    keys.push_back(it->first);
  }
  return keys;
}

}  // namespace numex
