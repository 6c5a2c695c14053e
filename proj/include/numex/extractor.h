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

#ifndef NUMEX_EXTRACTOR_H_
#define NUMEX_EXTRACTOR_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "numex/types.h"

namespace numex {

struct LiteralMatch {
  std::size_t begin = 0;  // byte offsets, half-open
  std::size_t end = 0;
  std::string text;
  ExpressionType guessed_type = ExpressionType::kQuantity;

  bool operator==(const LiteralMatch&) const = default;
};

// Regular-expression scan for digit literals: currency amounts with a
// prefix or suffix symbol (either separator convention, optional magnitude
// word), "H:MM" times, bare years 1000..2100 and grouped or decimal numbers.
// Matches never start or end inside a word.
std::vector<LiteralMatch> ExtractNumericLiterals(std::string_view text);

// A digit literal, or any English or German number word.
bool ContainsNumericExpression(std::string_view text);

}  // namespace numex

#endif  // NUMEX_EXTRACTOR_H_
