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

#include <gtest/gtest.h>

#include "numex/classifier.h"
#include "numex/errors.h"
#include "numex/formatter.h"
#include "numex/grammar.h"
#include "numex/locale.h"
#include "numex/token.h"

namespace numex {
namespace {

std::vector<ParsedExpression> ClassifyText(const std::string& text,
                                           const Locale& locale) {
  auto tokens = Tokenize(text);
  return ClassifyAll(ScanTokens(tokens, locale), tokens, locale);
}

TEST(ClassifierTest, YearCue) {
  auto e = ClassifyText("in nineteen forty-five", Locale::English());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].type, ExpressionType::kYear);
  EXPECT_EQ(std::get<YearPayload>(e[0].payload).year, 1945);
}

TEST(ClassifierTest, QuantityWithUnit) {
  auto e = ClassifyText("two thousand pieces", Locale::English());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].type, ExpressionType::kQuantity);
  const auto& q = std::get<QuantityPayload>(e[0].payload);
  EXPECT_EQ(q.value, NumericValue::Integer(2000));
  EXPECT_EQ(q.unit_word, "pieces");

  e = ClassifyText("zweitausend Teile", Locale::German());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].type, ExpressionType::kQuantity);
}

TEST(ClassifierTest, CurrencyAndTime) {
  auto e = ClassifyText("It cost fifty cents.", Locale::English());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].type, ExpressionType::kCurrency);
  e = ClassifyText("at ten o'clock", Locale::English());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].type, ExpressionType::kTimestamp);
}

TEST(ResolveTimeTest, Periods) {
  EXPECT_EQ(ResolveTime({7, 45, PeriodHint::kEvening}).hour, 19);
  EXPECT_EQ(ResolveTime({4, 0, PeriodHint::kExplicitPm}).hour, 16);
  EXPECT_EQ(ResolveTime({10, 0, PeriodHint::kUnspecified}).hour, 10);
  EXPECT_EQ(ResolveTime({15, 45, PeriodHint::kUnspecified}).hour, 15);
  EXPECT_EQ(ResolveTime({12, 0, PeriodHint::kExplicitAm}).hour, 0);
  EXPECT_EQ(ResolveTime({12, 30, PeriodHint::kExplicitPm}).hour, 12);
  EXPECT_EQ(ResolveTime({12, 0, PeriodHint::kNight}).hour, 0);
  EXPECT_EQ(ResolveTime({2, 0, PeriodHint::kNight}).hour, 2);
  EXPECT_EQ(ResolveTime({11, 0, PeriodHint::kNight}).hour, 23);
  EXPECT_EQ(ResolveTime({15, 0, PeriodHint::kMorning}).hour, 15);
}

TEST(FormatterTest, Years) {
  EXPECT_EQ(FormatYear(1945), "1945");
  EXPECT_EQ(FormatYear(2000), "2000");
  EXPECT_THROW(FormatYear(999), ContractViolation);
  EXPECT_THROW(FormatYear(2101), ContractViolation);
}

TEST(FormatterTest, Times) {
  EXPECT_EQ(FormatTime({19, 45}), "19:45");
  EXPECT_EQ(FormatTime({16, 0}), "16:00");
  EXPECT_EQ(FormatTime({7, 5}), "7:05");
  EXPECT_EQ(FormatTime({0, 0}), "0:00");
}

TEST(FormatterTest, Currency) {
  const Locale en = Locale::English();
  const Locale de = Locale::German();
  EXPECT_EQ(FormatCurrency(NumericValue::Integer(1000),
                           NumericValue::Integer(50), *en.FindCurrency("USD"),
                           std::nullopt, en),
            "$1,000.50");
  EXPECT_EQ(FormatCurrency(NumericValue::Integer(1000),
                           NumericValue::Integer(50), *de.FindCurrency("EUR"),
                           std::nullopt, de),
            "1.000,50\xE2\x82\xAC");
  EXPECT_EQ(FormatCurrency(NumericValue{91, 1, false}, NumericValue{},
                           *en.FindCurrency("USD"), "million", en),
            "$9.1 million");
  EXPECT_EQ(FormatCurrency(NumericValue::Integer(5), NumericValue{},
                           *en.FindCurrency("USD"), std::nullopt, en),
            "$5");
}

TEST(FormatterTest, Quantities) {
  EXPECT_EQ(FormatQuantity(NumericValue::Integer(2000), "pieces", std::nullopt,
                           Locale::English()),
            "2,000 pieces");
  EXPECT_EQ(FormatQuantity(NumericValue::Integer(2000), "Teile", std::nullopt,
                           Locale::German()),
            "2.000 Teile");
  EXPECT_EQ(FormatDecimal(NumericValue{1234567, 2, false}, Locale::German()),
            "12.345,67");
  EXPECT_EQ(GroupThousands("1234567", ','), "1,234,567");
  EXPECT_EQ(GroupThousands("999", ','), "999");
}

}  // namespace
}  // namespace numex
