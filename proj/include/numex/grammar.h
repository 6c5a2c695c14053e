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

#ifndef NUMEX_GRAMMAR_H_
#define NUMEX_GRAMMAR_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "numex/locale.h"
#include "numex/numeric_value.h"
#include "numex/token.h"
#include "numex/types.h"

namespace numex {

enum class CandidateKind { kCardinal, kClockPhrase, kCurrencyPhrase };

// One number-word span found in a token stream, before classification.
//
// `value` holds a NumericValue for cardinals, an as-spoken TimeOfDay for
// clock phrases and a MoneyPayload for currency phrases. For cardinals a
// trailing million/billion word is kept in `magnitude_word` instead of being
// folded into the value ("nine point one million" -> 9.1 + "million").
struct CandidateParse {
  Span span;
  CandidateKind kind = CandidateKind::kCardinal;
  std::variant<NumericValue, TimeOfDay, MoneyPayload> value;
  std::optional<std::string> magnitude_word;
  // Two-digit-pair year reading ("nineteen forty-five", German
  // "neunzehnhundertfünfundvierzig").
  bool pair_reading = false;

  const NumericValue& number() const { return std::get<NumericValue>(value); }
  const TimeOfDay& time() const { return std::get<TimeOfDay>(value); }
  const MoneyPayload& money() const { return std::get<MoneyPayload>(value); }
};

// Longest cardinal starting at token `at`.
std::optional<CandidateParse> ParseCardinal(const std::vector<Token>& tokens,
                                            std::size_t at,
                                            const Locale& locale);

// Clock idioms, digit forms ("4pm", "15:45 Uhr") and adjacent period words.
// The hour is kept as spoken; see ResolveTime for 24-hour conversion.
std::optional<CandidateParse> ParseClockPhrase(const std::vector<Token>& tokens,
                                               std::size_t at,
                                               const Locale& locale);

// Cardinal + currency unit word with an optional minor-unit tail.
std::optional<CandidateParse> ParseCurrencyPhrase(
    const std::vector<Token>& tokens, std::size_t at, const Locale& locale);

// Greedy left-to-right driver. At each position the longest of
// currency/clock/cardinal wins, ties broken in that order.
std::vector<CandidateParse> ScanTokens(const std::vector<Token>& tokens,
                                       const Locale& locale);
std::vector<CandidateParse> ScanSentence(std::string_view sentence,
                                         const Locale& locale);

// True when the lowercased word (or hyphenated compound / German compound)
// is made only of number words of `language`.
bool IsNumberWord(std::string_view lowercased, Language language);

}  // namespace numex

#endif  // NUMEX_GRAMMAR_H_
