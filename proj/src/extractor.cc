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

#include "numex/extractor.h"

#include <algorithm>
#include <cctype>
#include <regex>

#include "numex/grammar.h"
#include "numex/token.h"

namespace numex {
namespace {

const std::regex& LiteralPattern() {
  static const std::string number =
      R"(\d{1,3}(?:[.,]\d{3})+(?:[.,]\d+)?|\d+(?:[.,]\d+)?)";
  static const std::string symbol = "(?:\\$|\xE2\x82\xAC|\xC2\xA3|\xC2\xA5)";
  static const std::string magnitude =
      "(?: (?:[Mm]illion(?:en)?|[Bb]illion(?:en)?|trillion|Milliarden?))";
  static const std::regex re(
      // 1: prefix currency, 2: suffix currency, 3: time, 4: number
      "(" + symbol + "-?(?:" + number + ")" + magnitude + "?)" +
      "|((?:" + number + ")" + magnitude + "? ?" + symbol + ")" +
      "|(\\d{1,2}:\\d{2})" +
      "|(-?(?:" + number + ")" + magnitude + "?)");
  return re;
}

// Latin letters, digits and '_'. Non-ASCII counts only for the Latin-1 and
// Latin Extended-A lead bytes, so typographic quotes and currency symbols
// still delimit.
bool IsWordLead(unsigned char c) {
  return std::isalnum(c) || c == '_' || (c >= 0xC3 && c <= 0xC5);
}

bool WordCharBefore(std::string_view text, std::size_t pos) {
  if (pos == 0) return false;
  std::size_t i = pos - 1;
  while (i > 0 && (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) --i;
  return IsWordLead(static_cast<unsigned char>(text[i]));
}

bool WordCharAt(std::string_view text, std::size_t pos) {
  return pos < text.size() && IsWordLead(static_cast<unsigned char>(text[pos]));
}

}  // namespace

std::vector<LiteralMatch> ExtractNumericLiterals(std::string_view text) {
  std::vector<LiteralMatch> out;
  const std::regex& re = LiteralPattern();
  std::size_t pos = 0;
  std::cmatch m;
  while (pos < text.size() &&
         std::regex_search(text.data() + pos, text.data() + text.size(), m, re)) {
    const std::size_t begin = pos + static_cast<std::size_t>(m.position(0));
    const std::size_t end = begin + static_cast<std::size_t>(m.length(0));
    if (!WordCharBefore(text, begin) && !WordCharAt(text, end)) {
      LiteralMatch lit{begin, end, m.str(0), ExpressionType::kQuantity};
      if (m[1].matched || m[2].matched) {
        lit.guessed_type = ExpressionType::kCurrency;
      } else if (m[3].matched) {
        lit.guessed_type = ExpressionType::kTimestamp;
      } else if (lit.text.size() == 4 &&
                 std::isdigit(static_cast<unsigned char>(lit.text[0]))) {
        const int v = std::stoi(lit.text);
        if (v >= 1000 && v <= 2100) lit.guessed_type = ExpressionType::kYear;
      }
      out.push_back(std::move(lit));
      pos = end;
      continue;
    }
    // Skip the rest of the word that made this match invalid.
    std::size_t next = std::max(end, begin + 1);
    while (WordCharAt(text, next)) ++next;
    pos = next;
  }
  return out;
}

bool ContainsNumericExpression(std::string_view text) {
  if (!ExtractNumericLiterals(text).empty()) return true;
  for (const Token& t : Tokenize(text)) {
    if (!t.is_word) continue;
    if (IsNumberWord(t.lowercased, Language::kEnglish) ||
        IsNumberWord(t.lowercased, Language::kGerman)) {
      return true;
    }
  }
  return false;
}

}  // namespace numex
