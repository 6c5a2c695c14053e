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

#include <optional>
#include <string>

#include "numex/extractor.h"
#include "numex/verbalizer.h"

namespace numex {
namespace {

// "1.000,50" under the German locale -> 1000.50.
std::optional<NumericValue> ParseWrittenNumber(std::string_view text,
                                               const Locale& locale) {
  std::string plain;
  for (char c : text) {
    if (c == locale.thousands_separator()) continue;
    plain += c == locale.decimal_mark() ? '.' : c;
  }
  return NumericValue::FromString(plain);
}

// Splits "9.1 million" into number text and magnitude word.
std::pair<std::string_view, std::optional<std::string>> SplitMagnitude(
    std::string_view text) {
  const std::size_t space = text.rfind(' ');
  if (space == std::string_view::npos) return {text, std::nullopt};
  return {text.substr(0, space), std::string(text.substr(space + 1))};
}

std::optional<ParsedExpression> FromLiteral(const LiteralMatch& m,
                                            const Locale& locale) {
  ParsedExpression e;
  e.type = m.guessed_type;
  switch (m.guessed_type) {
    case ExpressionType::kYear:
      e.payload = YearPayload{std::stoi(m.text)};
      return e;
    case ExpressionType::kTimestamp: {
      const std::size_t colon = m.text.find(':');
      const int h = std::stoi(m.text.substr(0, colon));
      const int min = std::stoi(m.text.substr(colon + 1));
      if (h > 23 || min > 59) return std::nullopt;
      e.payload = TimeOfDay{h, min};
      return e;
    }
    case ExpressionType::kCurrency: {
      const CurrencyUnit* unit = nullptr;
      std::string rest;
      for (const auto& u : locale.currencies()) {
        const std::size_t at = m.text.find(u.symbol);
        if (at == std::string::npos) continue;
        unit = &u;
        rest = m.text.substr(0, at) + m.text.substr(at + u.symbol.size());
        break;
      }
      if (!unit) return std::nullopt;
      while (!rest.empty() && rest.back() == ' ') rest.pop_back();
      while (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      auto [number, magnitude] = SplitMagnitude(rest);
      auto value = ParseWrittenNumber(number, locale);
      if (!value) return std::nullopt;
      MoneyPayload money;
      money.currency_code = unit->code;
      money.magnitude_word = magnitude;
      if (!magnitude && value->scale == unit->minor_unit_digits) {
        money.major = NumericValue::Integer(value->IntegerPart());
        money.minor = NumericValue::Integer(
            value->mantissa % Pow10(unit->minor_unit_digits));
        money.minor_spoken = true;
      } else {
        money.major = *value;
      }
      e.payload = std::move(money);
      return e;
    }
    case ExpressionType::kQuantity: {
      auto [number, magnitude] = SplitMagnitude(m.text);
      auto value = ParseWrittenNumber(number, locale);
      if (!value) return std::nullopt;
      e.payload = QuantityPayload{*value, "", magnitude};
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string VerbalizeSentence(std::string_view sentence, const Locale& locale,
                              const VerbalizeOptions& options) {
  std::string out;
  std::size_t copied = 0;
  std::uint64_t salt = 0;
  for (const LiteralMatch& m : ExtractNumericLiterals(sentence)) {
    const auto e = FromLiteral(m, locale);
    if (!e) continue;
    VerbalizeOptions o = options;
    if (o.seed) o.seed = *o.seed + salt++;
    out.append(sentence.substr(copied, m.begin - copied));
    out += VerbalizeValue(*e, locale, o);
    copied = m.end;
  }
  out.append(sentence.substr(copied));
  return out;
}

}  // namespace numex
