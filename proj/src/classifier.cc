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

#include "numex/classifier.h"

#include <algorithm>
#include <cctype>
#include <span>
#include <string_view>

namespace numex {
namespace {

constexpr std::string_view kEnglishYearCues[] = {
    "in", "since", "year", "by", "from", "until"};
constexpr std::string_view kGermanYearCues[] = {
    "im", "seit", "jahr", "bis"};

// Words that follow a number without being its unit.
constexpr std::string_view kEnglishNonUnits[] = {
    "a", "about", "above", "after", "again", "ago", "all", "also", "am", "an",
    "and", "are", "around", "as", "at", "away", "back", "be", "because",
    "been", "before", "being", "below", "between", "both", "but", "by", "can",
    "could", "did", "do", "does", "down", "during", "each", "either", "else",
    "ever", "for", "from", "had", "half", "has", "have", "he", "her", "here",
    "him", "his", "how", "i", "if", "in", "into", "is", "it", "its", "just",
    "later", "less", "may", "me", "might", "minus", "more", "most", "my",
    "no", "nor", "not", "now", "o'clock", "of", "off", "on", "or", "our",
    "out", "over", "past", "pm", "point", "quarter", "since", "so", "than",
    "that", "the", "their", "them", "then", "there", "these", "they", "this",
    "till", "times", "to", "too", "until", "up", "us", "very", "was", "we",
    "were", "what", "when", "where", "which", "while", "who", "will", "with",
    "would", "yet", "you", "your",
};

bool Contains(std::span<const std::string_view> list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool IsAlphabeticWord(std::string_view w) {
  bool letter = false;
  for (unsigned char c : w) {
    if (std::isalpha(c) || c >= 0x80) {
      letter = true;
    } else if (c != '-' && c != '\'') {
      return false;
    }
  }
  return letter;
}

bool StartsUppercase(std::string_view w) {
  if (w.empty()) return false;
  unsigned char c = static_cast<unsigned char>(w[0]);
  if (c >= 'A' && c <= 'Z') return true;
  if (c == 0xC3 && w.size() > 1) {
    unsigned char d = static_cast<unsigned char>(w[1]);
    return d == 0x84 || d == 0x96 || d == 0x9C;
  }
  return false;
}

bool IsUnitNoun(const Token& token, const Locale& locale) {
  if (!token.is_word || !IsAlphabeticWord(token.surface)) return false;
  const std::string& lw = token.lowercased;
  if (IsNumberWord(lw, locale.language()) || locale.IsCurrencyWord(lw)) {
    return false;
  }
  if (locale.language() == Language::kGerman) {
    return StartsUppercase(token.surface) && lw != "uhr";
  }
  return !Contains(kEnglishNonUnits, lw);
}

bool HasYearCue(const std::vector<Token>& tokens, std::size_t start,
                Language language) {
  std::size_t i = start;
  while (i > 0 && !tokens[i - 1].is_word) --i;
  if (i == 0) return false;
  const std::string& w = tokens[i - 1].lowercased;
  return language == Language::kGerman ? Contains(kGermanYearCues, w)
                                       : Contains(kEnglishYearCues, w);
}

ParsedExpression ClassifyBounded(const CandidateParse& c,
                                 const std::vector<Token>& tokens,
                                 const Locale& locale, std::size_t limit) {
  ParsedExpression e;
  e.span = c.span;
  switch (c.kind) {
    case CandidateKind::kCurrencyPhrase:
      e.type = ExpressionType::kCurrency;
      e.payload = c.money();
      return e;
    case CandidateKind::kClockPhrase:
      e.type = ExpressionType::kTimestamp;
      e.payload = ResolveTime(c.time());
      return e;
    case CandidateKind::kCardinal:
      break;
  }
  const NumericValue& v = c.number();
  if (v.IsInteger() && !v.negative && !c.magnitude_word &&
      v.mantissa >= 1000 && v.mantissa <= 2100 &&
      (c.pair_reading || HasYearCue(tokens, c.span.start, locale.language()))) {
    e.type = ExpressionType::kYear;
    e.payload = YearPayload{static_cast<int>(v.mantissa)};
    return e;
  }
  QuantityPayload q;
  q.value = v;
  q.magnitude_word = c.magnitude_word;
  const std::size_t next = c.span.end;
  if (next < tokens.size() && next < limit &&
      IsUnitNoun(tokens[next], locale)) {
    q.unit_word = tokens[next].surface;
    e.span.end = next + 1;
  }
  e.type = ExpressionType::kQuantity;
  e.payload = std::move(q);
  return e;
}

}  // namespace

TimeOfDay ResolveTime(const TimeOfDay& time) {
  TimeOfDay out{time.hour, time.minute, PeriodHint::kUnspecified};
  const int h = time.hour;
  if (h == 0 || h >= 13) return out;
  switch (time.period_hint) {
    case PeriodHint::kExplicitPm:
    case PeriodHint::kAfternoon:
    case PeriodHint::kEvening:
      if (h <= 11) out.hour = h + 12;
      break;
    case PeriodHint::kNight:
      if (h == 12) {
        out.hour = 0;
      } else if (h >= 5) {
        out.hour = h + 12;
      }
      break;
    case PeriodHint::kExplicitAm:
    case PeriodHint::kMorning:
      if (h == 12) out.hour = 0;
      break;
    case PeriodHint::kUnspecified:
      break;
  }
  return out;
}

ParsedExpression Classify(const CandidateParse& candidate,
                          const std::vector<Token>& tokens,
                          const Locale& locale) {
  return ClassifyBounded(candidate, tokens, locale, tokens.size());
}

std::vector<ParsedExpression> ClassifyAll(
    const std::vector<CandidateParse>& candidates,
    const std::vector<Token>& tokens, const Locale& locale) {
  std::vector<ParsedExpression> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t limit = i + 1 < candidates.size()
                                  ? candidates[i + 1].span.start
                                  : tokens.size();
    out.push_back(ClassifyBounded(candidates[i], tokens, locale, limit));
  }
  return out;
}

}  // namespace numex
