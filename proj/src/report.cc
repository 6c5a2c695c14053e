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

#include "numex/report.h"

#include <fmt/format.h>

#include <cctype>
#include <cmath>
#include <sstream>

#include "numex/errors.h"
#include "numex/wer.h"

namespace numex {
namespace {

bool IsDelimiter(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return true;
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c >= 0x80) return c < 0xC3 || c > 0xC5;
  return !std::isalnum(c) && c != '_';
}

bool DelimitedBefore(std::string_view text, std::size_t pos) {
  if (pos == 0) return true;
  std::size_t i = pos - 1;
  while (i > 0 && (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) --i;
  return IsDelimiter(text, i);
}

constexpr std::array<const char*, 4> kColumnNames = {
    "years", "timestamps", "currency amounts", "quantities"};

}  // namespace

std::optional<double> TypeCounts::accuracy() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(total);
}

double EvalReport::wer() const {
  if (reference_words == 0) return static_cast<double>(word_edits);
  return static_cast<double>(word_edits) /
         static_cast<double>(reference_words);
}

std::optional<double> EvalReport::average_accuracy() const {
  double sum = 0;
  int n = 0;
  for (const auto& c : per_type) {
    if (auto a = c.accuracy()) {
      sum += *a;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

void EvalReport::Merge(const EvalReport& other) {
  for (std::size_t i = 0; i < per_type.size(); ++i) {
    per_type[i].correct += other.per_type[i].correct;
    per_type[i].total += other.per_type[i].total;
  }
  word_edits += other.word_edits;
  reference_words += other.reference_words;
}

bool ContainsDelimited(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return false;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    if (DelimitedBefore(haystack, pos) &&
        IsDelimiter(haystack, pos + needle.size())) {
      return true;
    }
  }
  return false;
}

EvalReport ScorePair(const ManifestRecord& reference,
                     std::string_view hypothesis) {
  EvalReport r;
  for (const auto& e : reference.expressions) {
    TypeCounts& c = r.counts(e.type);
    ++c.total;
    if (ContainsDelimited(hypothesis, e.surface)) ++c.correct;
  }
  const WerResult w = WordErrorRate(reference.formatted, hypothesis);
  r.word_edits = w.edits();
  r.reference_words = w.reference_length;
  return r;
}

EvalReport TypeAccuracy(const std::vector<ManifestRecord>& references,
                        const std::vector<std::string>& hypotheses) {
  if (references.size() != hypotheses.size()) {
    throw ContractViolation(fmt::format(
        "{} references but {} hypotheses", references.size(),
        hypotheses.size()));
  }
  EvalReport report;
  for (std::size_t i = 0; i < references.size(); ++i) {
    report.Merge(ScorePair(references[i], hypotheses[i]));
  }
  return report;
}

std::string FormatPercent(double fraction) {
  // The small bias keeps exact halves (0.57625 stored as 0.576249...) from
  // rounding down.
  const double tenths = std::floor(fraction * 1000.0 + 0.5 + 1e-9);
  return fmt::format("{:.1f}", tenths / 10.0);
}

std::string RenderReport(const EvalReport& report, ReportFormat format,
                         std::string_view label) {
  if (format == ReportFormat::kTsv) {
    std::string out = "metric\tnumerator\tdenominator\tpercent\n";
    out += fmt::format("wer\t{}\t{}\t{}\n", report.word_edits,
                       report.reference_words, FormatPercent(report.wer()));
    for (ExpressionType t : kAllExpressionTypes) {
      const TypeCounts& c = report.counts(t);
      auto a = c.accuracy();
      out += fmt::format("{}\t{}\t{}\t{}\n", ExpressionTypeName(t), c.correct,
                         c.total, a ? FormatPercent(*a) : "-");
    }
    auto avg = report.average_accuracy();
    out += fmt::format("average\t-\t-\t{}\n", avg ? FormatPercent(*avg) : "-");
    return out;
  }

  std::vector<std::string> headers = {"Model", "WER (%)"};
  for (const char* name : kColumnNames) {
    headers.push_back(fmt::format("Accuracy (%) {}", name));
  }
  headers.push_back("Accuracy (%) average");
  std::vector<std::string> cells = {std::string(label),
                                    FormatPercent(report.wer())};
  for (ExpressionType t : kAllExpressionTypes) {
    auto a = report.counts(t).accuracy();
    cells.push_back(a ? FormatPercent(*a) : "-");
  }
  auto avg = report.average_accuracy();
  cells.push_back(avg ? FormatPercent(*avg) : "-");

  std::string head = "|";
  std::string rule = "|";
  std::string row = "|";
  for (std::size_t i = 0; i < headers.size(); ++i) {
    const std::size_t w = std::max(headers[i].size(), cells[i].size());
    // Double bars after the label and before the average column.
    const char* sep = i == 0 || i + 2 == headers.size() ? "||" : "|";
    head += fmt::format(" {:<{}} {}", headers[i], w, sep);
    rule += std::string(w + 2, '-') + sep;
    row += i == 0 ? fmt::format(" {:<{}} {}", cells[i], w, sep)
                  : fmt::format(" {:>{}} {}", cells[i], w, sep);
  }
  return head + "\n" + rule + "\n" + row + "\n";
}

EvalReport ParseReportTsv(std::string_view tsv) {
  EvalReport report;
  std::istringstream in{std::string(tsv)};
  std::string line;
  std::size_t line_no = 0;
  bool saw_wer = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.rfind("metric\t", 0) == 0) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, '\t')) f.push_back(cell);
    if (f.size() != 4) throw ParseError("expected 4 tab-separated fields", line_no);
    if (f[0] == "average") continue;
    std::size_t num = 0;
    std::size_t den = 0;
    try {
      std::size_t used = 0;
      num = std::stoull(f[1], &used);
      if (used != f[1].size()) throw std::invalid_argument(f[1]);
      den = std::stoull(f[2], &used);
      if (used != f[2].size()) throw std::invalid_argument(f[2]);
    } catch (const std::exception&) {
      throw ParseError("counts must be non-negative integers", line_no);
    }
    if (f[0] == "wer") {
      report.word_edits = num;
      report.reference_words = den;
      saw_wer = true;
    } else if (auto t = ParseExpressionType(f[0])) {
      report.counts(*t) = {num, den};
    } else {
      throw ParseError("unknown metric '" + f[0] + "'", line_no);
    }
  }
  if (!saw_wer) throw ParseError("report has no wer row");
  return report;
}

}  // namespace numex
