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

#ifndef NUMEX_MANIFEST_H_
#define NUMEX_MANIFEST_H_

#include <cstddef>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numex/locale.h"
#include "numex/types.h"

namespace numex {

struct AnnotatedExpression {
  std::string surface;  // formatted literal as it appears in `formatted`
  ExpressionType type = ExpressionType::kQuantity;

  bool operator==(const AnnotatedExpression&) const = default;
};

// One corpus utterance. JSON-Lines field names: id, locale, type,
// verbalized, formatted, expressions, audio, voice.
struct ManifestRecord {
  std::string id;
  Language locale = Language::kEnglish;
  ExpressionType type = ExpressionType::kQuantity;
  std::string verbalized;
  std::string formatted;
  std::vector<AnnotatedExpression> expressions;
  std::optional<std::string> audio;
  std::optional<std::string> voice;

  bool operator==(const ManifestRecord&) const = default;
};

// Single-line JSON object, no trailing newline.
std::string SerializeRecord(const ManifestRecord& record);
// Throws ParseError carrying `line_number`.
ManifestRecord ParseRecord(std::string_view line, std::size_t line_number);

// Streams records from a JSON-Lines source; blank lines are skipped.
class ManifestReader {
 public:
  explicit ManifestReader(std::istream& in) : in_(in) {}

  std::optional<ManifestRecord> Next();
  std::size_t line_number() const { return line_number_; }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

std::vector<ManifestRecord> ReadManifest(std::istream& in);
// Throws std::runtime_error when the file cannot be opened.
std::vector<ManifestRecord> ReadManifest(const std::string& path);

// Appends records, one per line, flushing after each so a crash leaves at
// most the final line truncated. Write() may be called from several threads.
class ManifestWriter {
 public:
  explicit ManifestWriter(const std::string& path, bool append = true);

  void Write(const ManifestRecord& record);

 private:
  std::mutex mu_;
  std::ofstream out_;
};

void WriteManifest(const std::string& path,
                   const std::vector<ManifestRecord>& records);

}  // namespace numex

#endif  // NUMEX_MANIFEST_H_
