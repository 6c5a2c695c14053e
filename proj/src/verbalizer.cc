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

#include "numex/verbalizer.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <random>

#include "lexicon.h"
#include "numex/errors.h"

namespace numex {
namespace {

using lexicon::EnglishOnes;
using lexicon::EnglishTens;
using lexicon::GermanOnes;
using lexicon::GermanTens;

struct ScaleName {
  std::uint64_t value;
  const char* english;
  const char* german_singular;
  const char* german_plural;
};

constexpr std::array<ScaleName, 3> kScales = {{
    {1'000'000'000'000ULL, "trillion", "Billion", "Billionen"},
    {1'000'000'000ULL, "billion", "Milliarde", "Milliarden"},
    {1'000'000ULL, "million", "Million", "Millionen"},
}};

std::string EnglishBelow100(std::uint64_t n) {
  if (n < 20) return EnglishOnes()[n];
  std::string out = EnglishTens()[n / 10];
  if (n % 10) out += "-" + EnglishOnes()[n % 10];
  return out;
}

std::string EnglishBelow1000(std::uint64_t n) {
  std::string out;
  if (n >= 100) {
    out = EnglishOnes()[n / 100] + " hundred";
    n %= 100;
    if (n == 0) return out;
    out += ' ';
  }
  return out + EnglishBelow100(n);
}

std::string English(std::uint64_t n) {
  if (n == 0) return "zero";
  std::string out;
  auto add = [&out](const std::string& part) {
    if (!out.empty()) out += ' ';
    out += part;
  };
  for (const auto& s : kScales) {
    if (n >= s.value) {
      add(EnglishBelow1000(n / s.value) + " " + s.english);
      n %= s.value;
    }
  }
  if (n >= 1000) {
    add(EnglishBelow1000(n / 1000) + " thousand");
    n %= 1000;
  }
  if (n > 0) add(EnglishBelow1000(n));
  return out;
}

// `final` selects "eins" over the prefix form "ein".
std::string GermanBelow100(std::uint64_t n, bool final) {
  if (n == 1) return final ? "eins" : "ein";
  if (n < 20) return GermanOnes()[n];
  const std::uint64_t unit = n % 10;
  if (unit == 0) return GermanTens()[n / 10];
  return (unit == 1 ? std::string("ein") : GermanOnes()[unit]) + "und" +
         GermanTens()[n / 10];
}

std::string GermanBelow1000(std::uint64_t n, bool final) {
  std::string out;
  if (n >= 100) {
    out = GermanBelow100(n / 100, false) + "hundert";
    n %= 100;
  }
  if (n > 0) out += GermanBelow100(n, final);
  return out;
}

std::string German(std::uint64_t n) {
  if (n == 0) return "null";
  std::string out;
  for (const auto& s : kScales) {
    if (n >= s.value) {
      const std::uint64_t g = n / s.value;
      if (!out.empty()) out += ' ';
      out += g == 1 ? std::string("eine ") + s.german_singular
                    : GermanBelow1000(g, true) + " " + s.german_plural;
      n %= s.value;
    }
  }
  if (n > 0) {
    std::string word;
    if (n >= 1000) word = GermanBelow1000(n / 1000, false) + "tausend";
    if (n % 1000) word += GermanBelow1000(n % 1000, true);
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

std::string Capitalize(std::string word) {
  if (!word.empty() && word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  }
  return word;
}

int Spoken12(int hour24) {
  const int h = hour24 % 12;
  return h == 0 ? 12 : h;
}

std::string HourWord(int hour, Language language) {
  return language == Language::kGerman ? German(hour) : English(hour);
}

std::string EnglishPeriod(int hour24) {
  if (hour24 < 5) return "at night";
  if (hour24 < 12) return "in the morning";
  if (hour24 < 18) return "in the afternoon";
  return "in the evening";
}

std::string GermanPeriod(int hour24) {
  if (hour24 < 5) return "nachts";
  if (hour24 < 12) return "morgens";
  if (hour24 < 18) return "nachmittags";
  return "abends";
}

std::string EnglishMinutes(int m) {
  return English(m) + (m == 1 ? " minute" : " minutes");
}

std::string GermanMinutes(int m) {
  return m == 1 ? "eine Minute" : German(m) + " Minuten";
}

// Clock phrase without a day period. `hour` is the spoken hour word.
std::string ClockCore(TimestampFamily family, int hour, int minute,
                      Language language) {
  const std::string h = HourWord(hour, language);
  if (language == Language::kGerman) {
    switch (family) {
      case TimestampFamily::kOClock: {
        std::string out = (hour == 1 ? std::string("ein") : h) + " Uhr";
        if (minute > 0) out += " " + German(minute);
        return out;
      }
      case TimestampFamily::kQuarterPast:
        return "viertel nach " + h;
      case TimestampFamily::kHalfPast:
        return "halb " + h;
      case TimestampFamily::kQuarterTo:
        return "viertel vor " + h;
      case TimestampFamily::kMinutesPast:
        return GermanMinutes(minute) + " nach " + h;
      case TimestampFamily::kMinutesTo:
        return GermanMinutes(minute) + " vor " + h;
      case TimestampFamily::kDigital:
        break;
    }
    throw ContractViolation("digital clock style is English only");
  }
  switch (family) {
    case TimestampFamily::kOClock:
      return h + " o'clock";
    case TimestampFamily::kQuarterPast:
      return "quarter past " + h;
    case TimestampFamily::kHalfPast:
      return "half past " + h;
    case TimestampFamily::kQuarterTo:
      return "quarter to " + h;
    case TimestampFamily::kMinutesPast:
      return EnglishMinutes(minute) + " past " + h;
    case TimestampFamily::kMinutesTo:
      return EnglishMinutes(minute) + " to " + h;
    case TimestampFamily::kDigital: {
      std::string out = h;
      if (minute > 0 && minute < 10) out += " oh " + English(minute);
      if (minute >= 10) out += " " + English(minute);
      return out;
    }
  }
  return "";
}

std::string MoneyUnit(const CurrencyUnit& unit, bool major, bool plural,
                      Language language) {
  std::string w = major ? unit.MajorWord(plural) : unit.MinorWord(plural);
  return language == Language::kGerman ? Capitalize(w) : w;
}

// Number before a noun: German "ein Euro" rather than "eins Euro".
std::string CountWord(const NumericValue& v, Language language) {
  if (language == Language::kGerman && v.IsInteger() && v.mantissa == 1 &&
      !v.negative) {
    return "ein";
  }
  return VerbalizeNumber(v, language);
}

std::string VerbalizeMoney(const MoneyPayload& m, const Locale& locale) {
  const Language language = locale.language();
  const CurrencyUnit* unit = locale.FindCurrency(m.currency_code);
  if (!unit) throw ContractViolation("unknown currency " + m.currency_code);
  const bool one = m.major.IsInteger() && m.major.mantissa == 1;
  const bool has_minor = m.minor.mantissa > 0 || m.minor_spoken;
  if (m.magnitude_word) {
    return VerbalizeNumber(m.major, language) + " " + *m.magnitude_word + " " +
           MoneyUnit(*unit, true, true, language);
  }
  std::string minor;
  if (has_minor) {
    minor = CountWord(m.minor, language) + " " +
            MoneyUnit(*unit, false, m.minor.mantissa != 1, language);
  }
  if (m.major.IsZero() && m.minor.mantissa > 0) return minor;
  std::string out = CountWord(m.major, language) + " " +
                    MoneyUnit(*unit, true, !one, language);
  if (has_minor) {
    out += language == Language::kGerman ? " und " : " and ";
    out += minor;
  }
  return out;
}

}  // namespace

std::string_view TimestampFamilyName(TimestampFamily family) {
  switch (family) {
    case TimestampFamily::kOClock:
      return "oclock";
    case TimestampFamily::kQuarterPast:
      return "quarter-past";
    case TimestampFamily::kHalfPast:
      return "half-past";
    case TimestampFamily::kQuarterTo:
      return "quarter-to";
    case TimestampFamily::kMinutesPast:
      return "minutes-past";
    case TimestampFamily::kMinutesTo:
      return "minutes-to";
    case TimestampFamily::kDigital:
      return "digital";
  }
  return "";
}

std::optional<TimestampFamily> ParseTimestampFamily(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(TimestampFamily::kDigital); ++i) {
    auto f = static_cast<TimestampFamily>(i);
    if (TimestampFamilyName(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<TimestampFamily> ApplicableFamilies(const TimeOfDay& time,
                                                Language language) {
  const int m = time.minute;
  std::vector<TimestampFamily> out;
  if (language == Language::kGerman) out.push_back(TimestampFamily::kOClock);
  if (language == Language::kEnglish && m == 0) {
    out.push_back(TimestampFamily::kOClock);
  }
  if (m == 15) out.push_back(TimestampFamily::kQuarterPast);
  if (m == 30) out.push_back(TimestampFamily::kHalfPast);
  if (m == 45) out.push_back(TimestampFamily::kQuarterTo);
  if (m > 0) {
    if (m <= 30) {
      out.push_back(TimestampFamily::kMinutesPast);
      out.push_back(TimestampFamily::kMinutesTo);
    } else {
      out.push_back(TimestampFamily::kMinutesTo);
      out.push_back(TimestampFamily::kMinutesPast);
    }
  }
  if (language == Language::kEnglish) out.push_back(TimestampFamily::kDigital);
  return out;
}

std::string VerbalizeInteger(std::uint64_t value, Language language) {
  if (value >= NumericValue::kIntegerLimit) {
    throw ContractViolation(fmt::format("{} is too large to verbalize", value));
  }
  return language == Language::kGerman ? German(value) : English(value);
}

std::string VerbalizeNumber(const NumericValue& value, Language language) {
  std::string out;
  if (value.negative) out = "minus ";
  out += VerbalizeInteger(value.IntegerPart(), language);
  if (value.scale > 0) {
    out += language == Language::kGerman ? " Komma" : " point";
    for (char d : value.FractionDigits()) {
      out += ' ';
      out += language == Language::kGerman ? GermanOnes()[d - '0']
                                           : EnglishOnes()[d - '0'];
    }
  }
  return out;
}

std::string VerbalizeYear(int year, Language language) {
  if (year < 1000 || year > 2100) {
    throw ContractViolation(fmt::format("year {} outside [1000, 2100]", year));
  }
  const int head = year / 100;
  const int tail = year % 100;
  if (language == Language::kGerman) {
    if (head >= 11 && head <= 19) {
      std::string out = GermanOnes()[head] + "hundert";
      if (tail > 0) out += GermanBelow100(tail, true);
      return out;
    }
    return German(year);
  }
  if (head >= 11 && head <= 19) {
    std::string out = EnglishOnes()[head];
    if (tail == 0) return out + " hundred";
    if (tail < 10) return out + " oh " + EnglishOnes()[tail];
    return out + " " + EnglishBelow100(tail);
  }
  if (year >= 2010 && year <= 2099) return "twenty " + EnglishBelow100(tail);
  if (year == 2100) return "twenty-one hundred";
  return English(year);
}

std::string VerbalizeTime(const TimeOfDay& time, Language language,
                          TimestampFamily family) {
  if (time.hour < 0 || time.hour > 23 || time.minute < 0 || time.minute > 59) {
    throw ContractViolation("time of day out of range");
  }
  const auto families = ApplicableFamilies(time, language);
  if (std::find(families.begin(), families.end(), family) == families.end()) {
    throw ContractViolation(fmt::format("{} cannot express {}:{:02}",
                                        TimestampFamilyName(family), time.hour,
                                        time.minute));
  }
  const int h = time.hour;
  const int m = time.minute;
  const int next = Spoken12(h + 1);
  switch (family) {
    case TimestampFamily::kOClock:
      if (language == Language::kGerman) {
        return ClockCore(family, h, m, language);
      }
      return ClockCore(family, Spoken12(h), 0, language) + " " +
             EnglishPeriod(h);
    case TimestampFamily::kDigital:
      return ClockCore(family, Spoken12(h), m, language) +
             (h < 12 ? " am" : " pm");
    default:
      break;
  }
  std::string core;
  switch (family) {
    case TimestampFamily::kQuarterPast:
      core = ClockCore(family, Spoken12(h), m, language);
      break;
    case TimestampFamily::kHalfPast:
      core = ClockCore(family,
                       language == Language::kGerman ? next : Spoken12(h), m,
                       language);
      break;
    case TimestampFamily::kQuarterTo:
      core = ClockCore(family, next, m, language);
      break;
    case TimestampFamily::kMinutesPast:
      core = ClockCore(family, Spoken12(h), m, language);
      break;
    case TimestampFamily::kMinutesTo:
      core = ClockCore(family, next, 60 - m, language);
      break;
    default:
      break;
  }
  return core + " " +
         (language == Language::kGerman ? GermanPeriod(h) : EnglishPeriod(h));
}

std::string VerbalizeValue(const ParsedExpression& expression,
                           const Locale& locale,
                           const VerbalizeOptions& options) {
  const Language language = locale.language();
  switch (expression.type) {
    case ExpressionType::kYear:
      return VerbalizeYear(std::get<YearPayload>(expression.payload).year,
                           language);
    case ExpressionType::kTimestamp: {
      const auto& t = std::get<TimeOfDay>(expression.payload);
      auto families = ApplicableFamilies(t, language);
      TimestampFamily family = families.front();
      if (options.family) {
        family = *options.family;
      } else if (options.seed) {
        std::mt19937_64 rng(*options.seed);
        std::uniform_int_distribution<std::size_t> pick(0, families.size() - 1);
        family = families[pick(rng)];
      }
      return VerbalizeTime(t, language, family);
    }
    case ExpressionType::kCurrency:
      return VerbalizeMoney(std::get<MoneyPayload>(expression.payload), locale);
    case ExpressionType::kQuantity: {
      const auto& q = std::get<QuantityPayload>(expression.payload);
      std::string out = q.unit_word.empty() || q.magnitude_word
                            ? VerbalizeNumber(q.value, language)
                            : CountWord(q.value, language);
      if (q.magnitude_word) out += " " + *q.magnitude_word;
      if (!q.unit_word.empty()) out += " " + q.unit_word;
      return out;
    }
  }
  throw ContractViolation("unknown expression type");
}

std::vector<TimestampPhrasing> EnumerateTimestampPhrasings(
    const Locale& locale, const std::vector<int>& minute_offsets) {
  const Language language = locale.language();
  std::vector<TimestampPhrasing> out;
  auto before = [](int hour) { return hour == 1 ? 12 : hour - 1; };
  for (int h = 1; h <= 12; ++h) {
    const int next = h == 12 ? 1 : h + 1;
    out.push_back({TimestampFamily::kOClock, h,
                   ClockCore(TimestampFamily::kOClock, h, 0, language),
                   {h, 0}});
    out.push_back({TimestampFamily::kQuarterPast, h,
                   ClockCore(TimestampFamily::kQuarterPast, h, 15, language),
                   {h, 15}});
    if (language == Language::kGerman) {
      out.push_back({TimestampFamily::kHalfPast, h,
                     ClockCore(TimestampFamily::kHalfPast, next, 30, language),
                     {h, 30}});
    } else {
      out.push_back({TimestampFamily::kHalfPast, h,
                     ClockCore(TimestampFamily::kHalfPast, h, 30, language),
                     {h, 30}});
    }
    out.push_back({TimestampFamily::kQuarterTo, h,
                   ClockCore(TimestampFamily::kQuarterTo, h, 45, language),
                   {before(h), 45}});
    for (int m : minute_offsets) {
      if (m < 1 || m > 59) {
        throw ContractViolation("minute offset must be in 1..59");
      }
      out.push_back({TimestampFamily::kMinutesPast, h,
                     ClockCore(TimestampFamily::kMinutesPast, h, m, language),
                     {h, m}});
      out.push_back({TimestampFamily::kMinutesTo, h,
                     ClockCore(TimestampFamily::kMinutesTo, h, m, language),
                     {before(h), 60 - m}});
    }
  }
  return out;
}

}  // namespace numex
