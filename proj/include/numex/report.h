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

#ifndef NUMEX_REPORT_H_
#define NUMEX_REPORT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numex/manifest.h"
#include "numex/types.h"

namespace numex {

struct TypeCounts {
  std::size_t correct = 0;
  std::size_t total = 0;

  // correct / total; absent when nothing of this type was seen.
  std::optional<double> accuracy() const;
  bool operator==(const TypeCounts&) const = default;
};

struct EvalReport {
  std::array<TypeCounts, 4> per_type{};  // indexed by ExpressionType
  std::size_t word_edits = 0;
  std::size_t reference_words = 0;

  TypeCounts& counts(ExpressionType t) {
    return per_type[static_cast<std::size_t>(t)];
  }
  const TypeCounts& counts(ExpressionType t) const {
    return per_type[static_cast<std::size_t>(t)];
  }
  // Corpus WER: summed edits over summed reference lengths.
  double wer() const;
  // Unweighted mean over the types that occur.
  std::optional<double> average_accuracy() const;

  void Merge(const EvalReport& other);
  bool operator==(const EvalReport&) const = default;
};

// True when `needle` occurs in `haystack` bounded on both sides by the text
// edge, whitespace or punctuation (not by a letter or digit).
bool ContainsDelimited(std::string_view haystack, std::string_view needle);

// Scores one reference record against one hypothesis.
EvalReport ScorePair(const ManifestRecord& reference,
                     std::string_view hypothesis);

// Per-type exact-surface accuracy plus corpus WER over aligned lists.
// Throws ContractViolation when the lengths differ.
EvalReport TypeAccuracy(const std::vector<ManifestRecord>& references,
                        const std::vector<std::string>& hypotheses);

enum class ReportFormat { kTable, kTsv };

// Percentage with one decimal, rounding half up ("57.6").
std::string FormatPercent(double fraction);

// kTable mirrors the accuracy table layout: WER, then years, timestamps,
// currency amounts, quantities and the average, in percent. Types without
// data print "-". kTsv keeps the raw counts.
std::string RenderReport(const EvalReport& report, ReportFormat format,
                         std::string_view label = "system");

// Inverse of the kTsv rendering. Throws ParseError on malformed input.
EvalReport ParseReportTsv(std::string_view tsv);

}  // namespace numex

#endif  // NUMEX_REPORT_H_
