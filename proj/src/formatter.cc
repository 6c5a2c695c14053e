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

#include "numex/formatter.h"

#include <fmt/format.h>

#include "numex/errors.h"

namespace numex {
namespace {

std::string Join(const std::string& number, const std::string& symbol,
                 const std::optional<std::string>& magnitude_word,
                 CurrencyPlacement placement) {
  std::string body = number;
  if (magnitude_word) body += " " + *magnitude_word;
  if (placement == CurrencyPlacement::kPrefix) return symbol + body;
  // A word before a suffix symbol reads better with a space.
  return magnitude_word ? body + " " + symbol : body + symbol;
}

}  // namespace

std::string GroupThousands(std::string_view digits, char separator) {
  if (digits.empty()) throw ContractViolation("GroupThousands: empty input");
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw ContractViolation("GroupThousands: non-digit input");
    }
    if (i > 0 && (n - i) % 3 == 0) out += separator;
    out += digits[i];
  }
  return out;
}

std::string FormatYear(int year) {
  if (year < 1000 || year > 2100) {
    throw ContractViolation(fmt::format("year {} outside [1000, 2100]", year));
  }
  return std::to_string(year);
}

std::string FormatTime(const TimeOfDay& time) {
  return fmt::format("{}:{:02}", time.hour, time.minute);
}

std::string FormatDecimal(const NumericValue& value, const Locale& locale) {
  std::string out = value.negative ? "-" : "";
  out += GroupThousands(std::to_string(value.IntegerPart()),
                        locale.thousands_separator());
  if (value.scale > 0) {
    out += locale.decimal_mark();
    out += value.FractionDigits();
  }
  return out;
}

std::string FormatCurrency(const NumericValue& major, const NumericValue& minor,
                           const CurrencyUnit& unit,
                           const std::optional<std::string>& magnitude_word,
                           const Locale& locale, bool minor_spoken) {
  if (minor.mantissa >= 100 || !minor.IsInteger()) {
    throw ContractViolation("minor amount must be an integer below 100");
  }
  if (magnitude_word) {
    return Join(FormatDecimal(major, locale), unit.symbol, magnitude_word,
                locale.currency_placement());
  }
  if (major.scale > unit.minor_unit_digits) {
    throw ContractViolation("major amount has more digits than the currency");
  }
  std::string number = GroupThousands(std::to_string(major.IntegerPart()),
                                      locale.thousands_separator());
  const bool tail = unit.minor_unit_digits > 0 &&
                    (minor.mantissa > 0 || minor_spoken || major.scale > 0);
  if (tail) {
    std::uint64_t cents = minor.mantissa;
    if (major.scale > 0) {
      std::string frac = major.FractionDigits();
      frac.resize(unit.minor_unit_digits, '0');
      cents += std::stoull(frac);
    }
    number += locale.decimal_mark();
    number += fmt::format("{:0{}}", cents, unit.minor_unit_digits);
  }
  return Join(number, unit.symbol, std::nullopt, locale.currency_placement());
}

std::string FormatQuantity(const NumericValue& value,
                           std::string_view unit_word,
                           const std::optional<std::string>& magnitude_word,
                           const Locale& locale) {
  std::string out = FormatDecimal(value, locale);
  if (magnitude_word) out += " " + *magnitude_word;
  if (!unit_word.empty()) {
    out += ' ';
    out += unit_word;
  }
  return out;
}

std::string FormatExpression(const ParsedExpression& expression,
                             const Locale& locale) {
  switch (expression.type) {
    case ExpressionType::kYear:
      return FormatYear(std::get<YearPayload>(expression.payload).year);
    case ExpressionType::kTimestamp:
      return FormatTime(std::get<TimeOfDay>(expression.payload));
    case ExpressionType::kCurrency: {
      const auto& m = std::get<MoneyPayload>(expression.payload);
      const CurrencyUnit* unit = locale.FindCurrency(m.currency_code);
      if (!unit) {
        throw ContractViolation("unknown currency " + m.currency_code);
      }
      return FormatCurrency(m.major, m.minor, *unit, m.magnitude_word, locale,
                            m.minor_spoken);
    }
    case ExpressionType::kQuantity: {
      const auto& q = std::get<QuantityPayload>(expression.payload);
      return FormatQuantity(q.value, q.unit_word, q.magnitude_word, locale);
    }
  }
  throw ContractViolation("unknown expression type");
}

}  // namespace numex
