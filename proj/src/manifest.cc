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

#include "numex/manifest.h"

#include <json.hpp>

#include "numex/errors.h"

namespace numex {
namespace {

using nlohmann::json;

const json& Field(const json& j, const char* name, std::size_t line) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string("missing field '") + name + "'", line);
  }
  return *it;
}

std::string StringField(const json& j, const char* name, std::size_t line) {
  const json& v = Field(j, name, line);
  if (!v.is_string()) {
    throw ParseError(std::string("field '") + name + "' must be a string",
                     line);
  }
  return v.get<std::string>();
}

std::optional<std::string> OptionalString(const json& j, const char* name,
                                          std::size_t line) {
  auto it = j.find(name);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ParseError(std::string("field '") + name + "' must be a string",
                     line);
  }
  return it->get<std::string>();
}

ExpressionType TypeField(const std::string& name, std::size_t line) {
  auto t = ParseExpressionType(name);
  if (!t) throw ParseError("unknown expression type '" + name + "'", line);
  return *t;
}

}  // namespace

std::string SerializeRecord(const ManifestRecord& r) {
  json expressions = json::array();
  for (const auto& e : r.expressions) {
    expressions.push_back(
        {{"surface", e.surface}, {"type", ExpressionTypeName(e.type)}});
  }
  json j = {
      {"id", r.id},
      {"locale", LanguageCode(r.locale)},
      {"type", ExpressionTypeName(r.type)},
      {"verbalized", r.verbalized},
      {"formatted", r.formatted},
      {"expressions", std::move(expressions)},
      {"audio", r.audio ? json(*r.audio) : json(nullptr)},
      {"voice", r.voice ? json(*r.voice) : json(nullptr)},
  };
  return j.dump();
}

ManifestRecord ParseRecord(std::string_view line, std::size_t line_number) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_number);
  }
  if (!j.is_object()) throw ParseError("expected a JSON object", line_number);
  ManifestRecord r;
  r.id = StringField(j, "id", line_number);
  try {
    r.locale = ParseLanguage(StringField(j, "locale", line_number));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what(), line_number);
  }
  r.type = TypeField(StringField(j, "type", line_number), line_number);
  r.verbalized = StringField(j, "verbalized", line_number);
  r.formatted = StringField(j, "formatted", line_number);
  const json& exprs = Field(j, "expressions", line_number);
  if (!exprs.is_array()) {
    throw ParseError("field 'expressions' must be an array", line_number);
  }
  for (const json& e : exprs) {
    if (!e.is_object()) {
      throw ParseError("expression entries must be objects", line_number);
    }
    r.expressions.push_back(
        {StringField(e, "surface", line_number),
         TypeField(StringField(e, "type", line_number), line_number)});
  }
  r.audio = OptionalString(j, "audio", line_number);
  r.voice = OptionalString(j, "voice", line_number);
  return r;
}

std::optional<ManifestRecord> ManifestReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return ParseRecord(line, line_number_);
  }
  return std::nullopt;
}

std::vector<ManifestRecord> ReadManifest(std::istream& in) {
  ManifestReader reader(in);
  std::vector<ManifestRecord> out;
  while (auto r = reader.Next()) out.push_back(std::move(*r));
  return out;
}

std::vector<ManifestRecord> ReadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  return ReadManifest(in);
}

ManifestWriter::ManifestWriter(const std::string& path, bool append)
    : out_(path, append ? std::ios::app : std::ios::trunc) {
  if (!out_) throw std::runtime_error("cannot open manifest " + path);
}

void ManifestWriter::Write(const ManifestRecord& record) {
  const std::string line = SerializeRecord(record);
  std::lock_guard<std::mutex> lock(mu_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw std::runtime_error("manifest write failed");
}

void WriteManifest(const std::string& path,
                   const std::vector<ManifestRecord>& records) {
  ManifestWriter writer(path, /*append=*/false);
  for (const auto& r : records) writer.Write(r);
}

}  // namespace numex
