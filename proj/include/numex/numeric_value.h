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

#ifndef NUMEX_NUMERIC_VALUE_H_
#define NUMEX_NUMERIC_VALUE_H_

#include <cstdint>
#include <optional>
#include <string>

namespace numex {

// Exact decimal quantity: (negative ? -1 : 1) * mantissa * 10^-scale.
//
// Equality is structural, so 9.1 and 9.10 are different values: the scale
// records how many fractional digits were actually spoken.
struct NumericValue {
  static constexpr int kMaxScale = 6;
  // Integer part must stay below this bound (10^15).
  static constexpr std::uint64_t kIntegerLimit = 1'000'000'000'000'000ULL;

  std::uint64_t mantissa = 0;
  int scale = 0;
  bool negative = false;

  static NumericValue Integer(std::uint64_t v) { return {v, 0, false}; }

  // Builds a value from an integer part plus fractional digits ("1" for .1).
  // Returns nullopt on overflow or when the digit string is too long.
  static std::optional<NumericValue> FromParts(std::uint64_t integer_part,
                                               const std::string& fraction);

  // Parses "1945", "9.1", "-3.25" (always '.' as decimal mark).
  static std::optional<NumericValue> FromString(const std::string& text);

  std::uint64_t IntegerPart() const;
  // Fractional digits, zero padded to `scale` characters ("" when scale 0).
  std::string FractionDigits() const;
  bool IsInteger() const { return scale == 0; }
  bool IsZero() const { return mantissa == 0; }

  // Canonical plain rendering with '.' as decimal mark, no grouping.
  std::string ToString() const;

  bool operator==(const NumericValue&) const = default;
};

std::uint64_t Pow10(int exponent);

}  // namespace numex

#endif  // NUMEX_NUMERIC_VALUE_H_
