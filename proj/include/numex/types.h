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

#ifndef NUMEX_TYPES_H_
#define NUMEX_TYPES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "numex/numeric_value.h"
#include "numex/token.h"

namespace numex {

enum class ExpressionType { kYear, kTimestamp, kCurrency, kQuantity };

inline constexpr std::array<ExpressionType, 4> kAllExpressionTypes = {
    ExpressionType::kYear, ExpressionType::kTimestamp,
    ExpressionType::kCurrency, ExpressionType::kQuantity};

// "year", "timestamp", "currency", "quantity" (manifest and TSV spelling).
std::string_view ExpressionTypeName(ExpressionType type);
std::optional<ExpressionType> ParseExpressionType(std::string_view name);

enum class PeriodHint {
  kUnspecified,
  kMorning,
  kAfternoon,
  kEvening,
  kNight,
  kExplicitAm,
  kExplicitPm,
};

struct TimeOfDay {
  int hour = 0;    // 0..23
  int minute = 0;  // 0..59
  PeriodHint period_hint = PeriodHint::kUnspecified;

  bool operator==(const TimeOfDay&) const = default;
};

struct MoneyPayload {
  NumericValue major;
  NumericValue minor;
  std::string currency_code;  // ISO-4217, resolved through the locale
  std::string unit_word;      // surface of the spoken unit ("dollars")
  std::optional<std::string> magnitude_word;
  // "and zero cents" was spoken; forces a decimal tail.
  bool minor_spoken = false;

  bool operator==(const MoneyPayload&) const = default;
};

struct QuantityPayload {
  NumericValue value;
  std::string unit_word;  // empty when no unit follows
  std::optional<std::string> magnitude_word;

  bool operator==(const QuantityPayload&) const = default;
};

struct YearPayload {
  int year = 0;
  bool operator==(const YearPayload&) const = default;
};

using ExpressionPayload =
    std::variant<YearPayload, TimeOfDay, MoneyPayload, QuantityPayload>;

struct ParsedExpression {
  Span span;
  ExpressionType type = ExpressionType::kQuantity;
  ExpressionPayload payload;

  bool operator==(const ParsedExpression&) const = default;
};

}  // namespace numex

#endif  // NUMEX_TYPES_H_
