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

#include "numex/types.h"

namespace numex {

std::string_view ExpressionTypeName(ExpressionType type) {
  switch (type) {
    case ExpressionType::kYear:
      return "year";
    case ExpressionType::kTimestamp:
      return "timestamp";
    case ExpressionType::kCurrency:
      return "currency";
    case ExpressionType::kQuantity:
      return "quantity";
  }
  return "quantity";
}

std::optional<ExpressionType> ParseExpressionType(std::string_view name) {
  for (ExpressionType t : kAllExpressionTypes) {
    if (ExpressionTypeName(t) == name) return t;
  }
  return std::nullopt;
}

}  // namespace numex
