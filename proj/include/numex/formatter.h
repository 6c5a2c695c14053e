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

#ifndef NUMEX_FORMATTER_H_
#define NUMEX_FORMATTER_H_

#include <optional>
#include <string>
#include <string_view>

#include "numex/locale.h"
#include "numex/numeric_value.h"
#include "numex/types.h"

namespace numex {

// "1234567", ',' -> "1,234,567". `digits` must be non-empty decimal digits.
std::string GroupThousands(std::string_view digits, char separator);

// Plain digits; throws ContractViolation outside [1000, 2100].
std::string FormatYear(int year);

// "H:MM", hour unpadded.
std::string FormatTime(const TimeOfDay& time);

// Grouped integer part, locale decimal mark, spoken fraction digits.
std::string FormatDecimal(const NumericValue& value, const Locale& locale);

// "$1,000.50" / "1.000,50€"; "$9.1 million" when a magnitude word was
// spoken. The minor tail appears when minor > 0, when it was spoken, or when
// the major amount has a fraction.
std::string FormatCurrency(const NumericValue& major, const NumericValue& minor,
                           const CurrencyUnit& unit,
                           const std::optional<std::string>& magnitude_word,
                           const Locale& locale, bool minor_spoken = false);

// "2,000 pieces", "9.1 million", "7".
std::string FormatQuantity(const NumericValue& value,
                           std::string_view unit_word,
                           const std::optional<std::string>& magnitude_word,
                           const Locale& locale);

std::string FormatExpression(const ParsedExpression& expression,
                             const Locale& locale);

}  // namespace numex

#endif  // NUMEX_FORMATTER_H_
