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

#ifndef NUMEX_VERBALIZER_H_
#define NUMEX_VERBALIZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numex/locale.h"
#include "numex/numeric_value.h"
#include "numex/types.h"

namespace numex {

// Spoken clock styles. German reads kOClock as "H Uhr [M]" on a 24-hour
// dial and kHalfPast as "halb <next hour>"; kDigital ("seven forty-five pm")
// is English only.
enum class TimestampFamily {
  kOClock,
  kQuarterPast,
  kHalfPast,
  kQuarterTo,
  kMinutesPast,
  kMinutesTo,
  kDigital,
};

std::string_view TimestampFamilyName(TimestampFamily family);
std::optional<TimestampFamily> ParseTimestampFamily(std::string_view name);

// Families able to express a 24-hour time, in preference order.
std::vector<TimestampFamily> ApplicableFamilies(const TimeOfDay& time,
                                                Language language);

struct VerbalizeOptions {
  // Fixed timestamp family; must be applicable to the time.
  std::optional<TimestampFamily> family;
  // Seeded uniform choice among applicable families when `family` is unset.
  std::optional<std::uint64_t> seed;
};

// Cardinal words. German is written as one word below a million
// ("zweitausendeins"); scale words are separate ("zwei Millionen").
// Throws ContractViolation for values >= 10^15.
std::string VerbalizeInteger(std::uint64_t value, Language language);
// Adds "minus" and "point"/"Komma" with digits read one by one.
std::string VerbalizeNumber(const NumericValue& value, Language language);
// "nineteen forty-five", "neunzehnhundertfünfundvierzig".
std::string VerbalizeYear(int year, Language language);
// `time` is 24-hour; a day-period phrase is added wherever the family is
// 12-hour ("quarter to eight in the evening").
std::string VerbalizeTime(const TimeOfDay& time, Language language,
                          TimestampFamily family);

std::string VerbalizeValue(const ParsedExpression& expression,
                           const Locale& locale,
                           const VerbalizeOptions& options = {});

// Replaces every numeric literal the extractor finds in `sentence` with its
// spoken form. Literals that do not parse under `locale` are left as they
// are. Quantities keep their unit noun in place.
std::string VerbalizeSentence(std::string_view sentence, const Locale& locale,
                              const VerbalizeOptions& options = {});

struct TimestampPhrasing {
  TimestampFamily family;
  int hour = 1;        // the template's hour, 1..12
  std::string phrase;  // "quarter past one"
  TimeOfDay time;      // as spoken, no day period ("quarter to one" = 12:45)
};

// The six families of spoken clock times for every hour 1..12. The minute
// families are instantiated once per entry of `minute_offsets`.
std::vector<TimestampPhrasing> EnumerateTimestampPhrasings(
    const Locale& locale, const std::vector<int>& minute_offsets = {2});

}  // namespace numex

#endif  // NUMEX_VERBALIZER_H_
