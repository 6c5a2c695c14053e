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

#include "numex/numeric_value.h"

#include <cctype>
#include <limits>

namespace numex {

std::uint64_t Pow10(int exponent) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= 10;
  return r;
}

std::optional<NumericValue> NumericValue::FromParts(
    std::uint64_t integer_part, const std::string& fraction) {
  if (integer_part >= kIntegerLimit) return std::nullopt;
  const int scale = static_cast<int>(fraction.size());
  if (scale > kMaxScale) return std::nullopt;
  std::uint64_t mantissa = integer_part;
  for (char c : fraction) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (mantissa > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      return std::nullopt;
    }
    mantissa = mantissa * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return NumericValue{mantissa, scale, false};
}

std::optional<NumericValue> NumericValue::FromString(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::uint64_t integer = 0;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    if (integer >= kIntegerLimit) return std::nullopt;
    integer = integer * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    ++pos;
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  std::string fraction;
  if (pos < text.size() && text[pos] == '.') {
    fraction = text.substr(pos + 1);
    if (fraction.empty()) return std::nullopt;
    pos = text.size();
  }
  if (pos != text.size()) return std::nullopt;
  auto v = FromParts(integer, fraction);
  if (v) v->negative = negative && v->mantissa != 0;
  return v;
}

std::uint64_t NumericValue::IntegerPart() const {
  return mantissa / Pow10(scale);
}

std::string NumericValue::FractionDigits() const {
  if (scale == 0) return "";
  std::string digits = std::to_string(mantissa % Pow10(scale));
  return std::string(static_cast<std::size_t>(scale) - digits.size(), '0') +
         digits;
}

std::string NumericValue::ToString() const {
  std::string out = negative ? "-" : "";
  out += std::to_string(IntegerPart());
  if (scale > 0) out += "." + FractionDigits();
  return out;
}

}  // namespace numex
